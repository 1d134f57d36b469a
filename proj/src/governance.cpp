// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/governance.h"

#include "fire/errors.h"
#include "fire/sha256.h"

namespace fire::governance {

const char* to_string(Title t)
{
    switch (t) {
    case Title::Tourist:
        return "tourist";
    case Title::Craftsman:
        return "craftsman";
    case Title::Citizen:
        return "citizen";
    case Title::Hero:
        return "hero";
    }
    return "?";
}

const char* to_string(DigestKind k)
{
    return k == DigestKind::Sha256 ? "sha256" : "plain";
}

const char* to_string(BallotKind k)
{
    return k == BallotKind::Election ? "election" : "surplus";
}

const char* to_string(BallotPhase p)
{
    switch (p) {
    case BallotPhase::Open:
        return "open";
    case BallotPhase::Reveal:
        return "reveal";
    case BallotPhase::Closed:
        return "closed";
    }
    return "?";
}

void RankTable::validate() const
{
    if (entries.empty()) {
        throw ConfigError("rank table has no entries");
    }
    const RankEntry& first = entries.front();
    if (first.title != Title::Tourist || first.level != 1 || first.min_points != 0) {
        throw ConfigError("rank table must start at tourist level 1 with 0 points");
    }
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const RankEntry& prev = entries[i - 1];
        const RankEntry& cur = entries[i];
        if (cur.min_points <= prev.min_points) {
            throw ConfigError("rank table points must be strictly increasing");
        }
        if (cur.title < prev.title) {
            throw ConfigError("rank table titles must follow the ladder order");
        }
        if (cur.title == prev.title && cur.level != prev.level + 1) {
            throw ConfigError("rank table levels must ascend one by one within a title");
        }
        if (cur.title != prev.title && cur.level != 1) {
            throw ConfigError("rank table titles must restart at level 1");
        }
    }
}

RankTable default_rank_table()
{
    RankTable t;
    t.entries = {
        {Title::Tourist, 1, 0},     {Title::Tourist, 2, 10},    {Title::Tourist, 3, 25},
        {Title::Craftsman, 1, 50},  {Title::Craftsman, 2, 100}, {Title::Craftsman, 3, 200},
        {Title::Citizen, 1, 400},   {Title::Citizen, 2, 800},   {Title::Hero, 1, 1600},
    };
    return t;
}

Rank title_of(const Account& acc, const RankTable& table)
{
    bool lock_ok = acc.locked >= table.citizen_lock_threshold;
    Rank best{Title::Tourist, 1};
    for (const RankEntry& e : table.entries) {
        if (acc.contribution_points < e.min_points) {
            break;  // thresholds ascend, nothing further can match
        }
        if (e.title >= Title::Citizen && !lock_ok) {
            continue;  // points qualify but citizenship also needs the stake
        }
        best = {e.title, e.level};
    }
    return best;
}

bool orator_eligible(const Account& acc, const RankTable& table)
{
    Rank r = title_of(acc, table);
    return !(r.title == Title::Tourist && r.level == 1);
}

bool voting_eligible(const Account& acc, const RankTable& table)
{
    return title_of(acc, table).title >= Title::Citizen;
}

std::string vote_digest(DigestKind kind, std::string_view choice, std::string_view nonce)
{
    std::string preimage;
    preimage.reserve(choice.size() + 1 + nonce.size());
    preimage.append(choice);
    preimage.push_back('\n');
    preimage.append(nonce);
    if (kind == DigestKind::Sha256) {
        return sha256_hex(preimage);
    }
    return "plain:" + preimage;
}

void start_reveal(Ballot& b, std::uint64_t height)
{
    if (b.phase != BallotPhase::Open) {
        throw StateError("ballot '" + b.id + "' is not open, cannot start reveal");
    }
    b.phase = BallotPhase::Reveal;
    b.reveal_at = height;
}

void close_ballot(Ballot& b, std::uint64_t height)
{
    if (b.phase != BallotPhase::Reveal) {
        throw StateError("ballot '" + b.id + "' is not in reveal, cannot close");
    }
    b.phase = BallotPhase::Closed;
    b.closed_at = height;
}

void commit_vote(Ballot& b, const Account& voter, const RankTable& table,
                 const std::string& digest_hex)
{
    if (b.phase != BallotPhase::Open) {
        throw StateError("ballot '" + b.id + "' is not open for commitments");
    }
    if (!voting_eligible(voter, table)) {
        throw StateError("account '" + voter.id + "' is not a citizen, cannot vote");
    }
    if (b.commits.count(voter.id) != 0) {
        throw StateError("account '" + voter.id + "' already committed on ballot '" +
                         b.id + "'");
    }
    b.commits.emplace(voter.id, digest_hex);
}

bool reveal_vote(Ballot& b, const AccountId& voter, const std::string& choice,
                 const std::string& nonce, DigestKind digest)
{
    if (b.phase != BallotPhase::Reveal) {
        throw StateError("ballot '" + b.id + "' is not in the reveal phase");
    }
    auto it = b.commits.find(voter);
    if (it == b.commits.end()) {
        throw StateError("account '" + voter + "' has no commitment on ballot '" + b.id +
                         "'");
    }
    if (b.reveals.count(voter) != 0) {
        throw StateError("account '" + voter + "' already revealed on ballot '" + b.id +
                         "'");
    }
    if (b.burned.count(voter) != 0) {
        throw StateError("account '" + voter + "' burned its vote on ballot '" + b.id +
                         "'");
    }
    if (vote_digest(digest, choice, nonce) != it->second) {
        b.burned.insert(voter);  // wrong preimage burns the vote, no retry
        b.invalid_reveals += 1;
        return false;
    }
    b.reveals.emplace(voter, RevealedVote{choice});
    return true;
}

TallyResult tally_ballot(const Ballot& b)
{
    if (b.phase != BallotPhase::Closed) {
        throw StateError("ballot '" + b.id + "' is not closed, cannot tally");
    }
    TallyResult t;
    t.kind = b.kind;
    t.committed = b.commits.size();
    t.revealed = b.reveals.size();
    t.invalid_reveals = b.invalid_reveals;
    for (const auto& [voter, vote] : b.reveals) {
        (void)voter;
        if (b.kind == BallotKind::Election) {
            if (vote.choice == "yes") {
                t.yes += 1;
            } else if (vote.choice == "no") {
                t.no += 1;
            }
            // any other choice revealed validly still counts nowhere
        } else {
            t.campaign_votes[vote.choice] += 1;
        }
    }
    return t;
}

bool election_passed(const TallyResult& tally, const Rational& threshold)
{
    if (tally.kind != BallotKind::Election) {
        throw StateError("tally is not from an election ballot");
    }
    // The denominator is everyone who committed; silent non-reveals are
    // abstentions that still raise the bar. An empty ballot admits nobody.
    if (tally.committed == 0) {
        return false;
    }
    return tally.yes >= ceil_fraction(tally.committed, threshold);
}

}  // namespace fire::governance
