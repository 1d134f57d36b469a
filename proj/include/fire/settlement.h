// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fire/amount.h"
#include "fire/rational.h"

namespace fire::settlement {

enum class CampaignStatus { Open, Settled };

const char* to_string(CampaignStatus s);

// A crowdfunding campaign's escrow. Donations arrive on two channels that the
// settlement rules treat differently: direct transfers from accounts, and
// cpu-channel funds minted against contributed compute shares. per_backer
// tracks each backer's share of the cpu channel and always sums to
// cpu_donations while the campaign is open.
struct Campaign {
    CampaignId id;
    AccountId orator;
    FireAmount required_amount = 0;
    std::uint64_t deadline_height = 0;
    FireAmount direct_donations = 0;
    FireAmount cpu_donations = 0;
    std::map<AccountId, FireAmount> per_backer;
    CampaignStatus status = CampaignStatus::Open;

    FireAmount balance() const;             // direct + cpu, checked
    FireAmount remaining_capacity() const;  // required - balance; 0 once funded
};

// One backer's compute contribution to one campaign within a block.
struct ComputeShare {
    AccountId backer;
    CampaignId campaign;
    std::uint64_t units = 0;
};

enum class SettlementBranch { Full, Partial, Failed };

const char* to_string(SettlementBranch b);

// Where the escrow goes when a campaign settles. backer_payouts carries the
// cpu-channel kickback per backer; all four parts sum to the escrow balance.
struct SettlementOutcome {
    SettlementBranch branch = SettlementBranch::Failed;
    FireAmount campaign_payout = 0;
    std::map<AccountId, FireAmount> backer_payouts;
    FireAmount backer_payout_total = 0;
    FireAmount surplus_allocation = 0;
    FireAmount circulation_reduction = 0;
};

// Result of distributing one block's mint across the compute shares it
// carried. credits lists, per campaign, the amount credited and its breakdown
// by backer; total_credited is what actually got minted, dropped is the part
// of the reward no open campaign had capacity for (never minted).
struct CampaignCredit {
    FireAmount amount = 0;
    std::map<AccountId, FireAmount> by_backer;
};

struct AccrualResult {
    std::map<CampaignId, CampaignCredit> credits;
    FireAmount total_credited = 0;
    FireAmount dropped = 0;
};

// Splits `mint` pro rata by compute units among the campaigns the shares
// name, capped at each campaign's remaining capacity. Campaigns already at
// capacity accrue nothing; overflow from a campaign filled mid-block is
// re-routed pro rata among those still short; leftover with nobody short is
// dropped. Per-campaign credit is then attributed to backers pro rata by
// their units, ties by lowest backer id. No shares means no mint at all.
AccrualResult accrue_block_funds(std::span<const ComputeShare> shares, FireAmount mint,
                                 const std::map<CampaignId, FireAmount>& capacity);

// Branch selection depends only on the two totals: equality funds in full, a
// balance above half the goal settles partial, anything else failed.
SettlementBranch settlement_branch(FireAmount balance, FireAmount required);

// Applies the settlement table to an open campaign (pure, does not mutate):
//   full:    nothing vaporized or pooled beyond the backer kickback of
//            floor(cpu/2); the campaign keeps direct + cpu - floor(cpu/2)
//   partial: quarter of cpu each to backers, surplus pool and vaporization;
//            the campaign keeps direct + the cpu remainder
//   failed:  half of cpu to the surplus pool, half vaporized, backers nothing;
//            the campaign keeps direct + the cpu remainder
// Backer kickbacks split pro rata by per_backer credit, ties by lowest id.
// Settling an already settled campaign is a StateError.
SettlementOutcome settle_campaign(const Campaign& c);

// Exact backer share of a campaign's cpu channel. campaign_cpu == 0 has no
// defined contribution and throws StateError; callers branch before asking.
Rational relative_contribution(FireAmount backer_credit, FireAmount campaign_cpu);

}  // namespace fire::settlement
