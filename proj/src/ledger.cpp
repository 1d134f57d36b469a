// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/ledger.h"

#include "fire/errors.h"

namespace fire::ledger {

void ProtocolParams::validate() const
{
    if (quorum_fraction.num == 0 || quorum_fraction.num > quorum_fraction.den) {
        throw ConfigError("quorum fraction must be in (0, 1], got " + quorum_fraction.str());
    }
    if (election_fraction.num == 0 || election_fraction.num > election_fraction.den) {
        throw ConfigError("election fraction must be in (0, 1], got " +
                          election_fraction.str());
    }
    if (quorum_fraction.den > 0xFFFFFFFFull || election_fraction.den > 0xFFFFFFFFull) {
        throw ConfigError("threshold denominators must fit in 32 bits");
    }
}

FireAmount ledger_total(const ChainState& st)
{
    FireAmount total = 0;
    for (const auto& [id, acc] : st.accounts) {
        (void)id;
        total = checked_add(total, acc.balance);
        total = checked_add(total, acc.locked);
    }
    for (const auto& [id, auth] : st.authorities) {
        (void)id;
        total = checked_add(total, auth.stake);
    }
    for (const auto& [id, c] : st.campaigns) {
        (void)id;
        total = checked_add(total, c.direct_donations);
        total = checked_add(total, c.cpu_donations);
    }
    total = checked_add(total, st.pool.balance);
    return total;
}

void check_supply_invariant(const ChainState& st)
{
    FireAmount held = ledger_total(st);
    FireAmount circulating = st.emission.circulating();
    if (held != circulating) {
        throw InvariantError("supply invariant violated at height " +
                             std::to_string(st.height) + ": ledger holds " +
                             std::to_string(held) + " but minted - vaporized is " +
                             std::to_string(circulating));
    }
}

std::vector<AuthorityId> active_authority_ids(const ChainState& st)
{
    std::vector<AuthorityId> ids;
    for (const auto& [id, auth] : st.authorities) {
        if (auth.active) {
            ids.push_back(id);  // map order is already ascending
        }
    }
    return ids;
}

governance::Account& account_at(ChainState& st, const AccountId& id)
{
    auto it = st.accounts.find(id);
    if (it == st.accounts.end()) {
        throw StateError("unknown account '" + id + "'");
    }
    return it->second;
}

const governance::Account& account_at(const ChainState& st, const AccountId& id)
{
    auto it = st.accounts.find(id);
    if (it == st.accounts.end()) {
        throw StateError("unknown account '" + id + "'");
    }
    return it->second;
}

settlement::Campaign& campaign_at(ChainState& st, const CampaignId& id)
{
    auto it = st.campaigns.find(id);
    if (it == st.campaigns.end()) {
        throw StateError("unknown campaign '" + id + "'");
    }
    return it->second;
}

governance::Ballot& ballot_at(ChainState& st, const BallotId& id)
{
    auto it = st.ballots.find(id);
    if (it == st.ballots.end()) {
        throw StateError("unknown ballot '" + id + "'");
    }
    return it->second;
}

void transfer(ChainState& st, const AccountId& from, const AccountId& to, FireAmount amount)
{
    governance::Account& src = account_at(st, from);
    governance::Account& dst = account_at(st, to);
    src.balance = checked_sub(src.balance, amount);
    dst.balance = checked_add(dst.balance, amount);
}

void lock_stake(ChainState& st, const AccountId& id, FireAmount amount)
{
    for (const auto& [bid, ballot] : st.ballots) {
        (void)bid;
        if (ballot.phase != governance::BallotPhase::Closed &&
            ballot.commits.count(id) != 0) {
            throw StateError("account '" + id + "' has an outstanding commitment on ballot '" +
                             ballot.id + "', stake is frozen");
        }
    }
    governance::Account& acc = account_at(st, id);
    acc.balance = checked_sub(acc.balance, amount);
    acc.locked = checked_add(acc.locked, amount);
}

void donate(ChainState& st, const AccountId& from, const CampaignId& campaign,
            FireAmount amount)
{
    settlement::Campaign& c = campaign_at(st, campaign);
    if (c.status != settlement::CampaignStatus::Open) {
        throw StateError("campaign '" + campaign + "' is settled, donations are closed");
    }
    if (amount > c.remaining_capacity()) {
        throw StateError("donation of " + std::to_string(amount) + " overshoots campaign '" +
                         campaign + "' which only needs " +
                         std::to_string(c.remaining_capacity()) + " more");
    }
    governance::Account& src = account_at(st, from);
    src.balance = checked_sub(src.balance, amount);
    c.direct_donations = checked_add(c.direct_donations, amount);
}

void create_campaign(ChainState& st, const CampaignId& id, const AccountId& orator,
                     FireAmount required_amount, std::uint64_t deadline_height)
{
    if (st.campaigns.count(id) != 0) {
        throw StateError("campaign '" + id + "' already exists");
    }
    const governance::Account& acc = account_at(st, orator);
    if (!governance::orator_eligible(acc, st.ranks)) {
        throw StateError("account '" + orator + "' has not passed the entry rank, cannot "
                         "open a campaign");
    }
    if (required_amount == 0) {
        throw StateError("campaign '" + id + "' must require a positive amount");
    }
    settlement::Campaign c;
    c.id = id;
    c.orator = orator;
    c.required_amount = required_amount;
    c.deadline_height = deadline_height;
    st.campaigns.emplace(id, std::move(c));
}

}  // namespace fire::ledger
