// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fire/amount.h"

namespace fire {

// Integer pro-rata division by the largest remainder method.
//
// Every recipient first gets floor(total * weight_i / W) where W is the sum of
// weights; the units left over (strictly fewer than the number of recipients)
// go one each to the entries with the largest remainder total * weight_i mod W,
// ties broken towards the lowest index. The caller is responsible for ordering
// entries by ascending identifier so that "lowest index" means "lowest id".
//
// Postconditions: the result sums to exactly `total` (when W > 0), and every
// entry is within one unit of its exact rational share. W == 0 returns all
// zeros and distributes nothing.
std::vector<FireAmount> allocate_largest_remainder(FireAmount total,
                                                   std::span<const std::uint64_t> weights);

// Splits `total` indivisible units into n near-equal parts: every part gets
// floor(total / n) and the (total mod n) extra units go to consecutive indices
// starting at (rotation mod n), wrapping around. Rotating the start index by
// block height spreads the rounding benefit evenly across validators.
std::vector<std::uint64_t> split_equal_rotating(std::uint64_t total, std::size_t n,
                                                std::uint64_t rotation);

}  // namespace fire
