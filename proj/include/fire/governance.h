// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fire/amount.h"
#include "fire/rational.h"

namespace fire::governance {

// Rank ladder. Titles order strictly; levels refine within a title.
enum class Title { Tourist = 0, Craftsman = 1, Citizen = 2, Hero = 3 };

const char* to_string(Title t);

struct Rank {
    Title title = Title::Tourist;
    unsigned level = 1;

    bool operator==(const Rank& o) const { return title == o.title && level == o.level; }
};

// One rung of the ladder: the minimum contribution points that unlock it.
// Thresholds are inclusive (exactly min_points qualifies).
struct RankEntry {
    Title title = Title::Tourist;
    unsigned level = 1;
    std::uint64_t min_points = 0;
};

struct RankTable {
    std::vector<RankEntry> entries;
    FireAmount citizen_lock_threshold = 1000 * COIN;

    // Entries must start at Tourist level 1 with 0 points and be strictly
    // monotone in points, with titles in ladder order and levels ascending
    // within each title. Violations are ConfigErrors.
    void validate() const;
};

RankTable default_rank_table();

struct Account {
    AccountId id;
    FireAmount balance = 0;  // spendable
    FireAmount locked = 0;   // staked toward citizenship; not spendable
    std::uint64_t contribution_points = 0;
};

// Highest rung the account qualifies for. Citizen and Hero rungs additionally
// require locked stake of at least the table's citizen_lock_threshold; an
// account with Hero-grade points but no lock ranks at the top Craftsman rung.
Rank title_of(const Account& acc, const RankTable& table);

// Campaign creation is open to everyone past the entry rung (anything beyond
// Tourist level 1).
bool orator_eligible(const Account& acc, const RankTable& table);

// Ballot participation requires citizenship (Citizen or Hero).
bool voting_eligible(const Account& acc, const RankTable& table);

// Digest scheme for vote commitments. Sha256 hashes the preimage; Plain keeps
// it readable ("plain:" + preimage) so tests and worked examples can inspect
// commitments without computing hashes.
enum class DigestKind { Sha256, Plain };

const char* to_string(DigestKind k);

// Commitment digest of a vote: digest over choice + "\n" + nonce. The
// newline keeps (choice, nonce) pairs unambiguous.
std::string vote_digest(DigestKind kind, std::string_view choice, std::string_view nonce);

enum class BallotKind { Election, Surplus };
enum class BallotPhase { Open, Reveal, Closed };

const char* to_string(BallotKind k);
const char* to_string(BallotPhase p);

struct RevealedVote {
    std::string choice;  // "yes"/"no" for elections, a campaign id for surplus
};

struct Ballot {
    BallotId id;
    BallotKind kind = BallotKind::Surplus;
    BallotPhase phase = BallotPhase::Open;
    std::optional<AccountId> candidate;  // elections only
    std::uint64_t opened_at = 0;
    std::uint64_t reveal_at = 0;
    std::uint64_t closed_at = 0;
    std::map<AccountId, std::string> commits;       // voter -> digest hex
    std::map<AccountId, RevealedVote> reveals;      // voter -> accepted reveal
    std::set<AccountId> burned;                     // wrong preimage; no retry
    std::uint64_t invalid_reveals = 0;              // digest mismatches, discarded
};

// Phase transitions. Each records the height it happened at and only moves
// forward: Open -> Reveal -> Closed; anything else is a StateError.
void start_reveal(Ballot& b, std::uint64_t height);
void close_ballot(Ballot& b, std::uint64_t height);

// Records a commitment. Requires the open phase, a citizen voter, and no
// previous commit from the same account (no overwrites, no double commits).
void commit_vote(Ballot& b, const Account& voter, const RankTable& table,
                 const std::string& digest_hex);

// Checks the revealed (choice, nonce) against the stored commitment. A match
// is recorded; a mismatch bumps invalid_reveals and the vote is gone for good.
// Revealing without a commit, outside the reveal phase, or twice is an error.
// Returns whether the reveal was accepted.
bool reveal_vote(Ballot& b, const AccountId& voter, const std::string& choice,
                 const std::string& nonce, DigestKind digest);

// Tally of a closed ballot. Unrevealed commitments count as abstentions: they
// appear in committed (the election denominator) but in no choice bucket.
struct TallyResult {
    BallotKind kind = BallotKind::Surplus;
    std::uint64_t committed = 0;
    std::uint64_t revealed = 0;
    std::uint64_t invalid_reveals = 0;
    std::uint64_t yes = 0;                              // elections
    std::uint64_t no = 0;                               // elections
    std::map<CampaignId, std::uint64_t> campaign_votes; // surplus
};

TallyResult tally_ballot(const Ballot& b);

// Whether an election tally clears the admission bar: yes-votes reaching
// ceil(committed * threshold) with at least one committed vote.
bool election_passed(const TallyResult& tally, const Rational& threshold);

}  // namespace fire::governance
