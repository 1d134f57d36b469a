// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fire/amount.h"
#include "fire/consensus.h"
#include "fire/emission.h"
#include "fire/governance.h"
#include "fire/rational.h"
#include "fire/settlement.h"
#include "fire/surplus.h"

namespace fire::ledger {

// Protocol knobs that are not emission-curve parameters.
struct ProtocolParams {
    Rational quorum_fraction{2, 3};
    Rational election_fraction{3, 4};
    FireAmount min_authority_stake = 1000 * COIN;
    governance::DigestKind digest = governance::DigestKind::Sha256;

    void validate() const;
};

// The whole simulated world. Everything lives in ordered maps so iteration
// order (and with it every log line and digest) is deterministic.
struct ChainState {
    emission::EmissionState emission;
    ProtocolParams params;
    governance::RankTable ranks;
    std::map<AccountId, governance::Account> accounts;
    std::map<AuthorityId, consensus::Authority> authorities;
    std::map<CampaignId, settlement::Campaign> campaigns;
    surplus::SurplusPool pool;
    std::map<BallotId, governance::Ballot> ballots;
    std::vector<std::uint64_t> size_history;
    std::uint64_t height = 0;
};

// Sum of every token the ledger tracks: account balances and locks, authority
// stakes, campaign escrows, the surplus pool.
FireAmount ledger_total(const ChainState& st);

// The conservation cross-check: ledger_total must equal minted - vaporized
// after every block. Throws InvariantError with both figures on drift.
void check_supply_invariant(const ChainState& st);

// Ascending ids of the active authorities; the consensus rotation order.
std::vector<AuthorityId> active_authority_ids(const ChainState& st);

governance::Account& account_at(ChainState& st, const AccountId& id);
const governance::Account& account_at(const ChainState& st, const AccountId& id);

settlement::Campaign& campaign_at(ChainState& st, const CampaignId& id);
governance::Ballot& ballot_at(ChainState& st, const BallotId& id);

// Spendable-balance movement between accounts.
void transfer(ChainState& st, const AccountId& from, const AccountId& to, FireAmount amount);

// Moves spendable balance into the citizenship lock. Refused while the
// account has a commitment sitting in any open or revealing ballot, so stake
// cannot chase a pending vote.
void lock_stake(ChainState& st, const AccountId& id, FireAmount amount);

// Direct donation into a campaign escrow. Only open campaigns accept, and
// only up to the funding goal.
void donate(ChainState& st, const AccountId& from, const CampaignId& campaign,
            FireAmount amount);

// Registers a new campaign after checking the orator's rank.
void create_campaign(ChainState& st, const CampaignId& id, const AccountId& orator,
                     FireAmount required_amount, std::uint64_t deadline_height);

}  // namespace fire::ledger
