// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <string>

#include "fire/errors.h"

namespace fire {

// All token quantities are carried as unsigned 64-bit atomic units. One
// display coin is 10^10 atomic units, and the money supply cap is 2^64 - 1
// atomic units, so the full supply is representable without ever touching
// floating point.
using FireAmount = std::uint64_t;

inline constexpr FireAmount COIN = 10'000'000'000ull;
inline constexpr FireAmount MAX_SUPPLY = 0xFFFFFFFFFFFFFFFFull;

// Display value of the cap: floor((2^64 - 1) / 10^10) = 1,844,674,407 coins.
inline constexpr FireAmount MAX_SUPPLY_COINS = MAX_SUPPLY / COIN;

// Identifier aliases. Ids are restricted to [A-Za-z0-9_.-]+ by scenario
// validation so they can be embedded in CSV rows and digest preimages without
// any quoting.
using AccountId = std::string;
using CampaignId = std::string;
using AuthorityId = std::string;
using BallotId = std::string;

// 128-bit intermediates keep u64 x u64 products exact: (2^64-1)^2 < 2^128.
using u128 = unsigned __int128;

FireAmount checked_add(FireAmount a, FireAmount b);

// Subtraction that refuses to underflow. Used for every debit, so a negative
// balance is unrepresentable rather than merely unlikely.
FireAmount checked_sub(FireAmount a, FireAmount b);

// floor(value * num / den) computed exactly through a 128-bit intermediate.
// den must be nonzero; the quotient must fit back into 64 bits.
FireAmount mul_div_floor(FireAmount value, std::uint64_t num, std::uint64_t den);

// Whole display coins, floored: atomic / 10^10.
FireAmount to_display_coins(FireAmount atomic);

// Renders a u128 in decimal; helper for error messages and oracle tests.
std::string u128_to_string(u128 v);

}  // namespace fire
