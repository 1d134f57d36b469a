// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/settlement.h"

#include <algorithm>

#include "fire/errors.h"
#include "fire/prorata.h"

namespace fire::settlement {

const char* to_string(CampaignStatus s)
{
    return s == CampaignStatus::Open ? "open" : "settled";
}

const char* to_string(SettlementBranch b)
{
    switch (b) {
    case SettlementBranch::Full:
        return "full";
    case SettlementBranch::Partial:
        return "partial";
    case SettlementBranch::Failed:
        return "failed";
    }
    return "?";
}

FireAmount Campaign::balance() const
{
    return checked_add(direct_donations, cpu_donations);
}

FireAmount Campaign::remaining_capacity() const
{
    FireAmount b = balance();
    return b >= required_amount ? 0 : required_amount - b;
}

namespace {

// Distributes `amount` over the given (id, weight) pairs by largest remainder.
// Pairs must arrive sorted by id so remainder ties resolve to the lowest id.
template <typename Id>
std::map<Id, FireAmount> distribute_by_weight(FireAmount amount,
                                              const std::vector<std::pair<Id, std::uint64_t>>& entries)
{
    std::vector<std::uint64_t> weights;
    weights.reserve(entries.size());
    for (const auto& [id, w] : entries) {
        weights.push_back(w);
    }
    std::vector<FireAmount> shares = allocate_largest_remainder(amount, weights);
    std::map<Id, FireAmount> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out[entries[i].first] = shares[i];
    }
    return out;
}

}  // namespace

AccrualResult accrue_block_funds(std::span<const ComputeShare> shares, FireAmount mint,
                                 const std::map<CampaignId, FireAmount>& capacity)
{
    AccrualResult result;
    if (shares.empty()) {
        return result;  // no compute contributed, the block mints nothing
    }

    // Aggregate units per campaign and per backer within each campaign.
    // std::map keys keep everything in ascending-id order throughout, which
    // is what makes the remainder tie break deterministic.
    std::map<CampaignId, std::uint64_t> units_by_campaign;
    std::map<CampaignId, std::map<AccountId, std::uint64_t>> units_by_backer;
    for (const ComputeShare& s : shares) {
        if (s.units == 0) {
            continue;
        }
        auto it = capacity.find(s.campaign);
        if (it == capacity.end()) {
            throw StateError("compute share names unknown campaign '" + s.campaign + "'");
        }
        std::uint64_t& total = units_by_campaign[s.campaign];
        total = checked_add(total, s.units);
        std::uint64_t& mine = units_by_backer[s.campaign][s.backer];
        mine = checked_add(mine, s.units);
    }
    if (units_by_campaign.empty()) {
        return result;
    }

    // Campaigns already at capacity stopped accruing; only the rest take part
    // in this block's pro-rata split.
    std::map<CampaignId, FireAmount> credited;
    std::vector<CampaignId> eligible;
    for (const auto& [id, units] : units_by_campaign) {
        (void)units;
        if (capacity.at(id) > 0) {
            eligible.push_back(id);
        }
    }

    FireAmount remaining = mint;
    while (remaining > 0 && !eligible.empty()) {
        std::vector<std::pair<CampaignId, std::uint64_t>> entries;
        entries.reserve(eligible.size());
        for (const CampaignId& id : eligible) {
            entries.emplace_back(id, units_by_campaign.at(id));
        }
        std::map<CampaignId, FireAmount> round = distribute_by_weight(remaining, entries);

        // Cap each credit at the campaign's remaining capacity; what spills
        // over is re-routed in the next round among campaigns still short.
        FireAmount overflow = 0;
        std::vector<CampaignId> still_short;
        for (const CampaignId& id : eligible) {
            FireAmount room = capacity.at(id) - credited[id];
            FireAmount take = std::min(round[id], room);
            credited[id] += take;
            overflow = checked_add(overflow, round[id] - take);
            if (capacity.at(id) - credited[id] > 0) {
                still_short.push_back(id);
            }
        }
        if (overflow == remaining) {
            break;  // cannot place anything; drop the rest
        }
        remaining = overflow;
        eligible = std::move(still_short);
    }
    result.dropped = remaining;

    // Attribute each campaign's credit to its backers by contributed units.
    for (const auto& [id, amount] : credited) {
        CampaignCredit credit;
        credit.amount = amount;
        std::vector<std::pair<AccountId, std::uint64_t>> backers(
            units_by_backer.at(id).begin(), units_by_backer.at(id).end());
        credit.by_backer = distribute_by_weight(amount, backers);
        result.total_credited = checked_add(result.total_credited, amount);
        result.credits.emplace(id, std::move(credit));
    }
    return result;
}

SettlementBranch settlement_branch(FireAmount balance, FireAmount required)
{
    if (balance == required) {
        return SettlementBranch::Full;
    }
    // balance > required/2 without the rounding loss of halving: 2b > r.
    if (u128(balance) * 2 > u128(required)) {
        return SettlementBranch::Partial;
    }
    return SettlementBranch::Failed;
}

SettlementOutcome settle_campaign(const Campaign& c)
{
    if (c.status == CampaignStatus::Settled) {
        throw StateError("campaign '" + c.id + "' is already settled");
    }

    SettlementOutcome out;
    out.branch = settlement_branch(c.balance(), c.required_amount);

    // Integer shares of the cpu channel. Division floors; every floored
    // remainder stays with the campaign payout, so conservation is exact.
    FireAmount cpu = c.cpu_donations;
    FireAmount backer_pool = 0;
    switch (out.branch) {
    case SettlementBranch::Full:
        backer_pool = cpu / 2;
        break;
    case SettlementBranch::Partial:
        out.circulation_reduction = cpu / 4;
        out.surplus_allocation = cpu / 4;
        backer_pool = cpu / 4;
        break;
    case SettlementBranch::Failed:
        out.circulation_reduction = cpu / 2;
        out.surplus_allocation = cpu / 2;
        backer_pool = 0;
        break;
    }

    FireAmount cpu_remainder =
        cpu - out.circulation_reduction - out.surplus_allocation - backer_pool;
    out.campaign_payout = checked_add(c.direct_donations, cpu_remainder);

    if (backer_pool > 0) {
        std::vector<std::pair<AccountId, std::uint64_t>> backers(c.per_backer.begin(),
                                                                 c.per_backer.end());
        std::vector<std::uint64_t> weights;
        weights.reserve(backers.size());
        for (const auto& [id, credit] : backers) {
            weights.push_back(credit);
        }
        std::vector<FireAmount> shares = allocate_largest_remainder(backer_pool, weights);
        for (std::size_t i = 0; i < backers.size(); ++i) {
            out.backer_payouts[backers[i].first] = shares[i];
            out.backer_payout_total += shares[i];
        }
        // In a consistent campaign per_backer sums to cpu > 0, so the pool is
        // always fully paid. If a caller hands in a campaign with cpu funds
        // but no backer records, the unpayable pool stays with the campaign
        // so the outcome still conserves the escrow to the last unit.
        if (out.backer_payout_total != backer_pool) {
            out.campaign_payout = checked_add(out.campaign_payout,
                                              backer_pool - out.backer_payout_total);
        }
    }
    return out;
}

Rational relative_contribution(FireAmount backer_credit, FireAmount campaign_cpu)
{
    if (campaign_cpu == 0) {
        throw StateError("relative contribution undefined for a campaign with no cpu funds");
    }
    return Rational(backer_credit, campaign_cpu);
}

}  // namespace fire::settlement
