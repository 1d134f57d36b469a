// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fire/amount.h"
#include "fire/emission.h"
#include "fire/governance.h"
#include "fire/rational.h"
#include "fire/settlement.h"

namespace fire::scenario {

// Genesis declarations. Every account and every authority stake is funded by
// an explicit debit from one of the six premine tranche accounts, so the
// supply books balance from block zero.
struct GenesisAccount {
    AccountId id;
    FireAmount balance = 0;
    std::string funded_by;
};

struct GenesisAuthority {
    AuthorityId id;
    FireAmount stake = 0;
    std::string funded_by;
};

struct Config {
    unsigned speed_factor = 23;
    std::uint64_t block_interval_s = 10;
    std::size_t median_window = 100;
    std::uint64_t premine_coins = 0;
    emission::PremineSplit premine_split;
    std::uint64_t default_block_size = 1000;
    Rational quorum_fraction{2, 3};
    Rational election_fraction{3, 4};
    Rational sufficiency_coefficient{1, 1};
    FireAmount min_authority_stake = 1000 * COIN;
    FireAmount citizen_lock_threshold = 1000 * COIN;
    governance::DigestKind digest = governance::DigestKind::Sha256;
    governance::RankTable rank_table;  // citizen_lock_threshold is applied onto it
    std::vector<GenesisAuthority> authorities;
    std::vector<GenesisAccount> accounts;

    Config();
};

// ---- scenario events ----------------------------------------------------
// Each event is pinned to a slot ("height" in the file). All events in a slot
// ride the block attempted at that slot and take effect only if it finalizes.

struct EvCreateCampaign {
    CampaignId id;
    AccountId orator;
    FireAmount required_amount = 0;
    std::uint64_t deadline_height = 0;
};

struct EvComputeShares {
    std::vector<settlement::ComputeShare> shares;
};

struct EvDirectDonation {
    AccountId from;
    CampaignId campaign;
    FireAmount amount = 0;
};

struct EvTransfer {
    AccountId from;
    AccountId to;
    FireAmount amount = 0;
};

struct EvLockStake {
    AccountId account;
    FireAmount amount = 0;
};

struct EvAwardPoints {
    AccountId account;
    std::uint64_t points = 0;
};

struct EvOpenBallot {
    BallotId ballot;
    governance::BallotKind kind = governance::BallotKind::Surplus;
    std::optional<AccountId> candidate;  // required for elections
};

struct EvStartReveal {
    BallotId ballot;
};

struct EvCloseBallot {
    BallotId ballot;
};

struct EvCommit {
    BallotId ballot;
    AccountId voter;
    std::string digest_hex;  // precomputed, or resolved from choice+nonce sugar
};

struct EvReveal {
    BallotId ballot;
    AccountId voter;
    std::string choice;
    std::string nonce;
};

struct EvBlockSize {
    std::uint64_t size = 0;
};

enum class FaultMode { BadMint, BadAllocation, Oversize, BadProposer };

const char* to_string(FaultMode m);

struct EvFault {
    FaultMode mode = FaultMode::BadMint;
    std::int64_t mint_delta = 1;  // bad_mint only
};

struct EvVotes {
    std::vector<AuthorityId> voters;
};

using EventPayload =
    std::variant<EvCreateCampaign, EvComputeShares, EvDirectDonation, EvTransfer,
                 EvLockStake, EvAwardPoints, EvOpenBallot, EvStartReveal, EvCloseBallot,
                 EvCommit, EvReveal, EvBlockSize, EvFault, EvVotes>;

struct Event {
    std::uint64_t height = 0;  // slot index, 1-based
    EventPayload payload;
};

struct Scenario {
    Config config;
    std::vector<Event> events;
    std::uint64_t horizon = 0;
    std::uint64_t seed = 0;  // reserved for test tooling; the run ignores it
};

// Parses and fully validates a scenario document. Unknown keys anywhere,
// missing required fields, type mismatches, malformed ids, unordered events
// and references to never-declared accounts/campaigns/ballots/authorities are
// all rejected with a ScenarioError whose message names the JSON path.
Scenario parse_scenario(const std::string& json_text);

Scenario load_scenario(const std::filesystem::path& file);

}  // namespace fire::scenario
