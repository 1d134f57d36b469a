// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/surplus.h"

#include <algorithm>

#include "fire/errors.h"

namespace fire::surplus {

void rank_candidates(std::vector<RankedCampaign>& candidates)
{
    std::sort(candidates.begin(), candidates.end(),
              [](const RankedCampaign& a, const RankedCampaign& b) {
                  if (a.votes != b.votes) {
                      return a.votes > b.votes;
                  }
                  return a.id < b.id;
              });
}

std::size_t select_funded_count(std::span<const RankedCampaign> ranked,
                                const SurplusPool& pool)
{
    // Sum of the first n deficits must satisfy sum <= balance * num / den,
    // i.e. sum * den <= balance * num. Deficit prefix sums fit comfortably in
    // 128 bits (each deficit is 64-bit; scenario candidate counts are small),
    // and config validation keeps den within 32 bits, so both sides are exact.
    u128 budget = u128(pool.balance) * pool.sufficiency_coefficient.num;
    u128 prefix = 0;
    std::size_t n = 0;
    for (const RankedCampaign& c : ranked) {
        prefix += c.left_to_fill;
        if (prefix * pool.sufficiency_coefficient.den > budget) {
            break;  // prefix sums only grow; the first miss is final
        }
        ++n;
    }
    return n;
}

void distribute_equal_shares(std::span<const FireAmount> deficits, FireAmount pool,
                             std::span<FireAmount> payouts)
{
    if (payouts.size() != deficits.size()) {
        throw StateError("distribute_equal_shares: result span size mismatch");
    }
    std::fill(payouts.begin(), payouts.end(), FireAmount(0));

    // Indices of campaigns not yet fully funded. Each pass computes the equal
    // share from the pass-start pool and survivor count, funds every deficit
    // that fits inside that share, and re-runs with the shrunk pool. The pass
    // in which nobody fills is terminal: everyone left takes exactly the
    // share. Funding decisions depend only on the (multiset of deficits,
    // pool), so input order cannot change anyone's payout.
    //
    // The index set is compacted in place; small candidate lists (the normal
    // case, and the hot path of exhaustive tests) stay on the stack.
    constexpr std::size_t kStackSlots = 64;
    std::size_t stack_slots[kStackSlots];
    std::vector<std::size_t> heap_slots;
    std::size_t* unfilled = stack_slots;
    if (deficits.size() > kStackSlots) {
        heap_slots.resize(deficits.size());
        unfilled = heap_slots.data();
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < deficits.size(); ++i) {
        if (deficits[i] > 0) {
            unfilled[count++] = i;
        }
    }

    while (count > 0) {
        FireAmount share = pool / count;
        std::size_t kept = 0;
        for (std::size_t r = 0; r < count; ++r) {
            std::size_t i = unfilled[r];
            if (deficits[i] <= share) {
                payouts[i] = deficits[i];
                pool -= deficits[i];  // deficit <= share <= pool/survivors
            } else {
                unfilled[kept++] = i;
            }
        }
        if (kept == count) {
            for (std::size_t r = 0; r < count; ++r) {
                payouts[unfilled[r]] = share;
            }
            return;
        }
        count = kept;
    }
}

SurplusRoundResult run_surplus_round(SurplusPool& pool,
                                     std::vector<RankedCampaign> candidates)
{
    rank_candidates(candidates);

    SurplusRoundResult result;
    result.pool_before = pool.balance;
    result.selected = select_funded_count(candidates, pool);

    std::vector<FireAmount> deficits;
    deficits.reserve(result.selected);
    for (std::size_t i = 0; i < result.selected; ++i) {
        deficits.push_back(candidates[i].left_to_fill);
    }
    std::vector<FireAmount> payouts(deficits.size(), 0);
    distribute_equal_shares(deficits, pool.balance, payouts);

    for (std::size_t i = 0; i < result.selected; ++i) {
        result.payouts.push_back({candidates[i].id, payouts[i]});
        result.paid_total = checked_add(result.paid_total, payouts[i]);
    }
    pool.balance = checked_sub(pool.balance, result.paid_total);
    result.pool_after = pool.balance;
    return result;
}

}  // namespace fire::surplus
