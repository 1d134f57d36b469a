// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/consensus.h"

#include <algorithm>

#include "fire/errors.h"
#include "fire/ledger.h"
#include "fire/prorata.h"

namespace fire::consensus {

const char* to_string(VerdictReason r)
{
    switch (r) {
    case VerdictReason::None:
        return "none";
    case VerdictReason::BadProposer:
        return "bad_proposer";
    case VerdictReason::Oversize:
        return "oversize";
    case VerdictReason::BadMint:
        return "bad_mint";
    case VerdictReason::BadAllocation:
        return "bad_allocation";
    }
    return "?";
}

std::uint64_t quorum(std::uint64_t active_count, const Rational& fraction)
{
    return ceil_fraction(active_count, fraction);
}

const AuthorityId& proposer_for_height(const std::vector<AuthorityId>& active_sorted,
                                       std::uint64_t height)
{
    if (active_sorted.empty()) {
        throw StateError("no active authorities, nobody can propose");
    }
    return active_sorted[std::size_t(height % active_sorted.size())];
}

std::map<AuthorityId, std::uint64_t> split_compute(std::uint64_t total_units,
                                                   const std::vector<AuthorityId>& active_sorted,
                                                   std::uint64_t height)
{
    if (active_sorted.empty()) {
        throw StateError("no active authorities to split compute across");
    }
    std::vector<std::uint64_t> parts =
        split_equal_rotating(total_units, active_sorted.size(), height);
    std::map<AuthorityId, std::uint64_t> out;
    for (std::size_t i = 0; i < active_sorted.size(); ++i) {
        out[active_sorted[i]] = parts[i];
    }
    return out;
}

namespace {

// Remaining capacity of every open campaign; the accrual universe.
std::map<CampaignId, FireAmount> open_capacities(const ledger::ChainState& st)
{
    std::map<CampaignId, FireAmount> caps;
    for (const auto& [id, c] : st.campaigns) {
        if (c.status == settlement::CampaignStatus::Open) {
            caps.emplace(id, c.remaining_capacity());
        }
    }
    return caps;
}

}  // namespace

ValidationVerdict validate_block(const ledger::ChainState& state, const Block& block)
{
    std::vector<AuthorityId> active = ledger::active_authority_ids(state);
    if (proposer_for_height(active, block.height) != block.proposer) {
        return {false, VerdictReason::BadProposer};
    }

    std::uint64_t median = emission::rolling_median(state.size_history,
                                                    state.emission.median_window);
    if (block.size_bytes > 2 * median) {
        return {false, VerdictReason::Oversize};
    }

    // Re-derive what the block may mint and how it must be allocated; the
    // declared figures have to match the recomputation bit for bit.
    FireAmount base = emission::base_reward(state.emission);
    FireAmount allowed = emission::penalized_reward(base, block.size_bytes, median);
    settlement::AccrualResult accrual =
        settlement::accrue_block_funds(block.shares, allowed, open_capacities(state));
    if (block.declared_mint != accrual.total_credited) {
        return {false, VerdictReason::BadMint};
    }
    if (block.declared_allocation.has_value()) {
        std::map<CampaignId, FireAmount> recomputed;
        for (const auto& [id, credit] : accrual.credits) {
            recomputed.emplace(id, credit.amount);
        }
        if (*block.declared_allocation != recomputed) {
            return {false, VerdictReason::BadAllocation};
        }
    }
    return {true, VerdictReason::None};
}

void slash_authority(ledger::ChainState& state, const AuthorityId& id)
{
    auto it = state.authorities.find(id);
    if (it == state.authorities.end()) {
        throw StateError("cannot slash unknown authority '" + id + "'");
    }
    Authority& auth = it->second;
    if (!auth.active) {
        throw StateError("authority '" + id + "' is already slashed");
    }
    // The stake is burned back into the mintable pool, not redistributed:
    // vaporizing raises every future base reward instead of paying anyone.
    FireAmount stake = auth.stake;
    auth.stake = 0;
    auth.active = false;
    emission::vaporize(state.emission, stake);
}

void admit_authority(ledger::ChainState& state, const AccountId& candidate)
{
    if (state.authorities.count(candidate) != 0) {
        throw StateError("authority id '" + candidate +
                         "' already has a seat record (active or slashed)");
    }
    governance::Account& acc = ledger::account_at(state, candidate);
    FireAmount stake = state.params.min_authority_stake;
    if (acc.balance < stake) {
        throw AccountingError("candidate '" + candidate + "' cannot post the minimum stake of " +
                              std::to_string(stake) + ", balance is " +
                              std::to_string(acc.balance));
    }
    acc.balance -= stake;
    state.authorities.emplace(candidate, Authority{candidate, stake, true});
}

namespace {

// Applies a finalized block's effects: credit the mint, settle what is due,
// advance the chain. Only called once the verdict and quorum are in.
void apply_block(ledger::ChainState& st, const Block& block, FinalizeOutcome& out)
{
    FireAmount base = emission::base_reward(st.emission);
    std::uint64_t median = emission::rolling_median(st.size_history,
                                                    st.emission.median_window);
    FireAmount allowed = emission::penalized_reward(base, block.size_bytes, median);
    settlement::AccrualResult accrual =
        settlement::accrue_block_funds(block.shares, allowed, open_capacities(st));

    for (const auto& [id, credit] : accrual.credits) {
        settlement::Campaign& c = st.campaigns.at(id);
        c.cpu_donations = checked_add(c.cpu_donations, credit.amount);
        for (const auto& [backer, part] : credit.by_backer) {
            c.per_backer[backer] = checked_add(c.per_backer[backer], part);
        }
    }
    emission::mint(st.emission, accrual.total_credited);
    out.minted = accrual.total_credited;
    out.dropped = accrual.dropped;

    st.height = block.height;
    st.size_history.push_back(block.size_bytes);

    // Settlement pass: campaigns that reached their goal settle immediately,
    // campaigns at their deadline settle as they stand.
    for (auto& [id, c] : st.campaigns) {
        if (c.status != settlement::CampaignStatus::Open) {
            continue;
        }
        bool due = c.balance() == c.required_amount || st.height >= c.deadline_height;
        if (!due) {
            continue;
        }
        settlement::SettlementOutcome res = settlement::settle_campaign(c);
        governance::Account& orator = ledger::account_at(st, c.orator);
        orator.balance = checked_add(orator.balance, res.campaign_payout);
        for (const auto& [backer, amount] : res.backer_payouts) {
            governance::Account& b = ledger::account_at(st, backer);
            b.balance = checked_add(b.balance, amount);
        }
        st.pool.balance = checked_add(st.pool.balance, res.surplus_allocation);
        emission::vaporize(st.emission, res.circulation_reduction);
        c.status = settlement::CampaignStatus::Settled;
        c.direct_donations = 0;
        c.cpu_donations = 0;
        c.per_backer.clear();
        out.settlements.push_back({st.height, id, std::move(res)});
    }
}

}  // namespace

FinalizeOutcome finalize_block(ledger::ChainState& state, const Block& block)
{
    if (block.height != state.height + 1) {
        throw StateError("block height " + std::to_string(block.height) +
                         " does not extend the chain at height " +
                         std::to_string(state.height));
    }
    FinalizeOutcome out;
    out.verdict = validate_block(state, block);

    std::vector<AuthorityId> active = ledger::active_authority_ids(state);
    out.quorum_needed = quorum(active.size(), state.params.quorum_fraction);
    std::uint64_t supporting = 0;
    for (const AuthorityId& v : block.votes) {
        if (std::binary_search(active.begin(), active.end(), v)) {
            supporting += 1;  // only seated, active authorities count
        }
    }
    out.votes = supporting;

    bool has_quorum = supporting >= out.quorum_needed;
    if (out.verdict.valid && has_quorum) {
        apply_block(state, block, out);
        out.finalized = true;
        return out;
    }

    if (!out.verdict.valid) {
        // A bad block that gathered quorum burns everyone who endorsed it,
        // proposer included; short of quorum only the proposer pays.
        std::set<AuthorityId> to_slash;
        if (has_quorum) {
            for (const AuthorityId& v : block.votes) {
                if (std::binary_search(active.begin(), active.end(), v)) {
                    to_slash.insert(v);
                }
            }
        }
        if (std::binary_search(active.begin(), active.end(), block.proposer)) {
            to_slash.insert(block.proposer);
        }
        for (const AuthorityId& id : to_slash) {
            slash_authority(state, id);
            out.slashed.push_back(id);
        }
    }
    return out;
}

}  // namespace fire::consensus
