// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fire/amount.h"
#include "fire/rational.h"

namespace fire::surplus {

// Community pool fed by settlement surplus allocations. The sufficiency
// coefficient scales how much of a candidate list the pool is willing to
// commit to (compared against the sum of deficits, exactly, as a rational).
struct SurplusPool {
    FireAmount balance = 0;
    Rational sufficiency_coefficient{1, 1};
};

// One candidate campaign in a redistribution round: its ballot votes and how
// far it is from its funding goal.
struct RankedCampaign {
    CampaignId id;
    std::uint64_t votes = 0;
    FireAmount left_to_fill = 0;
};

// Sorts candidates by descending votes, ties by ascending id. Zero-vote
// candidates stay in the list; popularity only orders, it never excludes.
void rank_candidates(std::vector<RankedCampaign>& candidates);

// Largest n such that the first n candidates' deficits sum to at most
// pool.balance * sufficiency_coefficient (compared exactly). Candidates must
// already be ranked.
std::size_t select_funded_count(std::span<const RankedCampaign> ranked,
                                const SurplusPool& pool);

// Core equal-share distribution: repeatedly computes the equal share
// floor(pool / #unfilled), fully funds and removes every campaign whose
// deficit fits within that share, and repeats until no campaign fills, then
// pays the final equal share to each survivor. Payouts never exceed a
// campaign's deficit, never exceed the pool in total, and the whole map is
// insensitive to the order the deficits are given in. `payouts` must have the
// same length as `deficits`.
void distribute_equal_shares(std::span<const FireAmount> deficits, FireAmount pool,
                             std::span<FireAmount> payouts);

struct RoundPayout {
    CampaignId id;
    FireAmount amount = 0;
};

struct SurplusRoundResult {
    std::size_t selected = 0;
    std::vector<RoundPayout> payouts;  // for selected campaigns, ranked order
    FireAmount pool_before = 0;
    FireAmount paid_total = 0;
    FireAmount pool_after = 0;
};

// One full redistribution round: rank, select, distribute, debit the pool.
// The pool keeps whatever the equal-share flooring left unassigned.
SurplusRoundResult run_surplus_round(SurplusPool& pool,
                                     std::vector<RankedCampaign> candidates);

}  // namespace fire::surplus
