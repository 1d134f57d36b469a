// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/scenario.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fire/errors.h"

namespace fire::scenario {

using nlohmann::json;

const char* to_string(FaultMode m)
{
    switch (m) {
    case FaultMode::BadMint:
        return "bad_mint";
    case FaultMode::BadAllocation:
        return "bad_allocation";
    case FaultMode::Oversize:
        return "oversize";
    case FaultMode::BadProposer:
        return "bad_proposer";
    }
    return "?";
}

Config::Config() : rank_table(governance::default_rank_table()) {}

namespace {

const std::set<std::string> TRANCHE_NAMES = {"development", "developers_locked", "foundation",
                                             "team",        "community",         "advisors"};

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw ScenarioError(path + ": " + msg);
}

void expect_object(const json& j, const std::string& path)
{
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
}

void expect_array(const json& j, const std::string& path)
{
    if (!j.is_array()) {
        fail(path, "expected an array");
    }
}

// DD-style strictness: every key must be known, misspellings never pass.
void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(path + "." + it.key(), "unknown key");
        }
    }
}

const json& require_key(const json& obj, const std::string& path, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing required key '") + key + "'");
    }
    return *it;
}

std::uint64_t as_u64(const json& v, const std::string& path)
{
    if (!v.is_number_unsigned()) {
        fail(path, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::uint64_t get_u64(const json& obj, const std::string& path, const char* key)
{
    return as_u64(require_key(obj, path, key), path + "." + key);
}

std::uint64_t get_u64_or(const json& obj, const std::string& path, const char* key,
                         std::uint64_t fallback)
{
    auto it = obj.find(key);
    return it == obj.end() ? fallback : as_u64(*it, path + "." + key);
}

std::string as_string(const json& v, const std::string& path)
{
    if (!v.is_string()) {
        fail(path, "expected a string");
    }
    return v.get<std::string>();
}

std::string get_string(const json& obj, const std::string& path, const char* key)
{
    return as_string(require_key(obj, path, key), path + "." + key);
}

bool valid_id(const std::string& s)
{
    if (s.empty() || s.size() > 64) {
        return false;
    }
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::string get_id(const json& obj, const std::string& path, const char* key)
{
    std::string s = get_string(obj, path, key);
    if (!valid_id(s)) {
        fail(path + "." + key, "ids must match [A-Za-z0-9_.-]{1,64}");
    }
    return s;
}

Rational get_fraction(const json& obj, const std::string& path, const char* key,
                      Rational fallback)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    std::string sub = path + "." + key;
    expect_object(*it, sub);
    check_keys(*it, sub, {"num", "den"});
    std::uint64_t num = get_u64(*it, sub, "num");
    std::uint64_t den = get_u64(*it, sub, "den");
    if (den == 0) {
        fail(sub + ".den", "denominator must be positive");
    }
    if (den > 0xFFFFFFFFull) {
        fail(sub + ".den", "denominator must fit in 32 bits");
    }
    return Rational(num, den);
}

governance::Title parse_title(const std::string& s, const std::string& path)
{
    if (s == "tourist") {
        return governance::Title::Tourist;
    }
    if (s == "craftsman") {
        return governance::Title::Craftsman;
    }
    if (s == "citizen") {
        return governance::Title::Citizen;
    }
    if (s == "hero") {
        return governance::Title::Hero;
    }
    fail(path, "unknown title '" + s + "' (expected tourist/craftsman/citizen/hero)");
}

Config parse_config(const json& j, const std::string& path)
{
    expect_object(j, path);
    check_keys(j, path,
               {"speed_factor", "block_interval_s", "median_window", "premine_coins",
                "premine_split_permille", "default_block_size", "quorum_fraction",
                "election_fraction", "sufficiency_coefficient", "min_authority_stake",
                "citizen_lock_threshold", "digest", "rank_table", "authorities", "accounts"});

    Config cfg;
    std::uint64_t speed = get_u64_or(j, path, "speed_factor", cfg.speed_factor);
    if (speed == 0 || speed > 63) {
        fail(path + ".speed_factor", "must be in [1, 63]");
    }
    cfg.speed_factor = unsigned(speed);

    cfg.block_interval_s = get_u64_or(j, path, "block_interval_s", cfg.block_interval_s);
    if (cfg.block_interval_s == 0) {
        fail(path + ".block_interval_s", "must be positive");
    }

    std::uint64_t window = get_u64_or(j, path, "median_window", cfg.median_window);
    if (window == 0 || window > 1'000'000) {
        fail(path + ".median_window", "must be in [1, 1000000]");
    }
    cfg.median_window = std::size_t(window);

    cfg.premine_coins = get_u64_or(j, path, "premine_coins", 0);
    if (cfg.premine_coins > MAX_SUPPLY / COIN) {
        fail(path + ".premine_coins", "premine exceeds the money supply");
    }

    if (auto it = j.find("premine_split_permille"); it != j.end()) {
        std::string sub = path + ".premine_split_permille";
        expect_object(*it, sub);
        check_keys(*it, sub, {"development", "developers_locked", "foundation", "team",
                              "community", "advisors"});
        emission::PremineSplit split;
        split.development = std::uint32_t(get_u64(*it, sub, "development"));
        split.developers_locked = std::uint32_t(get_u64(*it, sub, "developers_locked"));
        split.foundation = std::uint32_t(get_u64(*it, sub, "foundation"));
        split.team = std::uint32_t(get_u64(*it, sub, "team"));
        split.community = std::uint32_t(get_u64(*it, sub, "community"));
        split.advisors = std::uint32_t(get_u64(*it, sub, "advisors"));
        std::uint64_t sum = std::uint64_t(split.development) + split.developers_locked +
                            split.foundation + split.team + split.community + split.advisors;
        if (sum != 1000) {
            fail(sub, "permille parts must sum to 1000, got " + std::to_string(sum));
        }
        cfg.premine_split = split;
    }

    cfg.default_block_size = get_u64_or(j, path, "default_block_size", cfg.default_block_size);
    if (cfg.default_block_size == 0 || cfg.default_block_size > 0xFFFFFFFFull) {
        fail(path + ".default_block_size", "must be in [1, 2^32-1]");
    }

    cfg.quorum_fraction = get_fraction(j, path, "quorum_fraction", cfg.quorum_fraction);
    cfg.election_fraction = get_fraction(j, path, "election_fraction", cfg.election_fraction);
    cfg.sufficiency_coefficient =
        get_fraction(j, path, "sufficiency_coefficient", cfg.sufficiency_coefficient);
    if (cfg.quorum_fraction.num == 0 ||
        rational_less(Rational{1, 1}, cfg.quorum_fraction)) {
        fail(path + ".quorum_fraction", "must be in (0, 1]");
    }
    if (cfg.election_fraction.num == 0 ||
        rational_less(Rational{1, 1}, cfg.election_fraction)) {
        fail(path + ".election_fraction", "must be in (0, 1]");
    }

    cfg.min_authority_stake = get_u64_or(j, path, "min_authority_stake",
                                         cfg.min_authority_stake);
    cfg.citizen_lock_threshold = get_u64_or(j, path, "citizen_lock_threshold",
                                            cfg.citizen_lock_threshold);

    if (auto it = j.find("digest"); it != j.end()) {
        std::string d = as_string(*it, path + ".digest");
        if (d == "sha256") {
            cfg.digest = governance::DigestKind::Sha256;
        } else if (d == "plain") {
            cfg.digest = governance::DigestKind::Plain;
        } else {
            fail(path + ".digest", "expected 'sha256' or 'plain'");
        }
    }

    if (auto it = j.find("rank_table"); it != j.end()) {
        std::string sub = path + ".rank_table";
        expect_array(*it, sub);
        cfg.rank_table.entries.clear();
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string epath = sub + "[" + std::to_string(i) + "]";
            const json& e = (*it)[i];
            expect_object(e, epath);
            check_keys(e, epath, {"title", "level", "min_points"});
            governance::RankEntry entry;
            entry.title = parse_title(get_string(e, epath, "title"), epath + ".title");
            std::uint64_t level = get_u64(e, epath, "level");
            if (level == 0 || level > 100) {
                fail(epath + ".level", "must be in [1, 100]");
            }
            entry.level = unsigned(level);
            entry.min_points = get_u64(e, epath, "min_points");
            cfg.rank_table.entries.push_back(entry);
        }
    }
    cfg.rank_table.citizen_lock_threshold = cfg.citizen_lock_threshold;
    try {
        cfg.rank_table.validate();
    } catch (const ConfigError& e) {
        fail(path + ".rank_table", e.what());
    }

    std::set<std::string> account_ids(TRANCHE_NAMES.begin(), TRANCHE_NAMES.end());
    if (auto it = j.find("accounts"); it != j.end()) {
        std::string sub = path + ".accounts";
        expect_array(*it, sub);
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string epath = sub + "[" + std::to_string(i) + "]";
            const json& e = (*it)[i];
            expect_object(e, epath);
            check_keys(e, epath, {"id", "balance", "funded_by"});
            GenesisAccount acc;
            acc.id = get_id(e, epath, "id");
            acc.balance = get_u64(e, epath, "balance");
            acc.funded_by = get_string(e, epath, "funded_by");
            if (TRANCHE_NAMES.count(acc.funded_by) == 0) {
                fail(epath + ".funded_by", "'" + acc.funded_by +
                     "' is not a premine tranche");
            }
            if (acc.funded_by == "developers_locked") {
                fail(epath + ".funded_by", "the developers tranche is locked and cannot fund");
            }
            if (!account_ids.insert(acc.id).second) {
                fail(epath + ".id", "duplicate account id '" + acc.id + "'");
            }
            cfg.accounts.push_back(std::move(acc));
        }
    }

    std::set<std::string> authority_ids;
    if (auto it = j.find("authorities"); it != j.end()) {
        std::string sub = path + ".authorities";
        expect_array(*it, sub);
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string epath = sub + "[" + std::to_string(i) + "]";
            const json& e = (*it)[i];
            expect_object(e, epath);
            check_keys(e, epath, {"id", "stake", "funded_by"});
            GenesisAuthority auth;
            auth.id = get_id(e, epath, "id");
            auth.stake = get_u64(e, epath, "stake");
            if (auth.stake == 0) {
                fail(epath + ".stake", "authority stake must be positive");
            }
            auth.funded_by = get_string(e, epath, "funded_by");
            if (TRANCHE_NAMES.count(auth.funded_by) == 0) {
                fail(epath + ".funded_by", "'" + auth.funded_by +
                     "' is not a premine tranche");
            }
            if (auth.funded_by == "developers_locked") {
                fail(epath + ".funded_by", "the developers tranche is locked and cannot fund");
            }
            if (!authority_ids.insert(auth.id).second) {
                fail(epath + ".id", "duplicate authority id '" + auth.id + "'");
            }
            cfg.authorities.push_back(std::move(auth));
        }
    }

    return cfg;
}

// Funding feasibility: the genesis debits drawn from each tranche must fit
// inside what the premine actually allots to it.
void check_genesis_funding(const Config& cfg, const std::string& path)
{
    std::vector<emission::PremineAllocation> premine;
    try {
        premine = emission::genesis_premine(cfg.premine_split, cfg.premine_coins);
    } catch (const ConfigError& e) {
        fail(path, e.what());
    }
    std::map<std::string, FireAmount> available;
    for (const auto& a : premine) {
        available[a.account] = a.amount;
    }
    auto debit = [&](const std::string& tranche, FireAmount amount, const std::string& what) {
        FireAmount& left = available[tranche];
        if (amount > left) {
            fail(path, "tranche '" + tranche + "' cannot fund " + what + " (needs " +
                       std::to_string(amount) + ", has " + std::to_string(left) + " left)");
        }
        left -= amount;
    };
    for (const auto& acc : cfg.accounts) {
        debit(acc.funded_by, acc.balance, "account '" + acc.id + "'");
    }
    for (const auto& auth : cfg.authorities) {
        debit(auth.funded_by, auth.stake, "authority '" + auth.id + "'");
    }
}

// Tracks what the event stream has brought into existence so far, so every
// reference is checked against things that can actually exist at that point.
struct EventContext {
    std::set<std::string> accounts;      // genesis accounts + tranches
    std::set<std::string> authorities;   // genesis seats + election candidates
    std::set<std::string> campaigns;
    std::map<std::string, governance::BallotKind> ballots;
    std::map<std::string, int> ballot_file_phase;  // 0 open, 1 reveal, 2 closed
};

EventPayload parse_event_payload(const json& e, const std::string& path, const Config& cfg,
                                 EventContext& ctx)
{
    std::string type = get_string(e, path, "type");

    if (type == "create_campaign") {
        check_keys(e, path, {"height", "type", "id", "orator", "required_amount",
                             "deadline_height"});
        EvCreateCampaign ev;
        ev.id = get_id(e, path, "id");
        ev.orator = get_id(e, path, "orator");
        ev.required_amount = get_u64(e, path, "required_amount");
        ev.deadline_height = get_u64(e, path, "deadline_height");
        if (ctx.accounts.count(ev.orator) == 0) {
            fail(path + ".orator", "references undeclared account '" + ev.orator + "'");
        }
        if (!ctx.campaigns.insert(ev.id).second) {
            fail(path + ".id", "campaign '" + ev.id + "' already created");
        }
        if (ev.required_amount == 0) {
            fail(path + ".required_amount", "must be positive");
        }
        if (ev.deadline_height == 0) {
            fail(path + ".deadline_height", "must be positive");
        }
        return ev;
    }

    if (type == "compute_shares") {
        check_keys(e, path, {"height", "type", "shares"});
        const json& arr = require_key(e, path, "shares");
        expect_array(arr, path + ".shares");
        if (arr.empty()) {
            fail(path + ".shares", "must not be empty");
        }
        EvComputeShares ev;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string spath = path + ".shares[" + std::to_string(i) + "]";
            const json& s = arr[i];
            expect_object(s, spath);
            check_keys(s, spath, {"backer", "campaign", "units"});
            settlement::ComputeShare share;
            share.backer = get_id(s, spath, "backer");
            share.campaign = get_id(s, spath, "campaign");
            share.units = get_u64(s, spath, "units");
            if (ctx.accounts.count(share.backer) == 0) {
                fail(spath + ".backer", "references undeclared account '" + share.backer + "'");
            }
            if (ctx.campaigns.count(share.campaign) == 0) {
                fail(spath + ".campaign",
                     "references undeclared campaign '" + share.campaign + "'");
            }
            if (share.units == 0) {
                fail(spath + ".units", "must be positive");
            }
            ev.shares.push_back(std::move(share));
        }
        return ev;
    }

    if (type == "direct_donation") {
        check_keys(e, path, {"height", "type", "from", "campaign", "amount"});
        EvDirectDonation ev;
        ev.from = get_id(e, path, "from");
        ev.campaign = get_id(e, path, "campaign");
        ev.amount = get_u64(e, path, "amount");
        if (ctx.accounts.count(ev.from) == 0) {
            fail(path + ".from", "references undeclared account '" + ev.from + "'");
        }
        if (ctx.campaigns.count(ev.campaign) == 0) {
            fail(path + ".campaign", "references undeclared campaign '" + ev.campaign + "'");
        }
        return ev;
    }

    if (type == "transfer") {
        check_keys(e, path, {"height", "type", "from", "to", "amount"});
        EvTransfer ev;
        ev.from = get_id(e, path, "from");
        ev.to = get_id(e, path, "to");
        ev.amount = get_u64(e, path, "amount");
        if (ctx.accounts.count(ev.from) == 0) {
            fail(path + ".from", "references undeclared account '" + ev.from + "'");
        }
        if (ctx.accounts.count(ev.to) == 0) {
            fail(path + ".to", "references undeclared account '" + ev.to + "'");
        }
        return ev;
    }

    if (type == "lock_stake") {
        check_keys(e, path, {"height", "type", "account", "amount"});
        EvLockStake ev;
        ev.account = get_id(e, path, "account");
        ev.amount = get_u64(e, path, "amount");
        if (ctx.accounts.count(ev.account) == 0) {
            fail(path + ".account", "references undeclared account '" + ev.account + "'");
        }
        return ev;
    }

    if (type == "award_points") {
        check_keys(e, path, {"height", "type", "account", "points"});
        EvAwardPoints ev;
        ev.account = get_id(e, path, "account");
        ev.points = get_u64(e, path, "points");
        if (ctx.accounts.count(ev.account) == 0) {
            fail(path + ".account", "references undeclared account '" + ev.account + "'");
        }
        return ev;
    }

    if (type == "open_ballot") {
        check_keys(e, path, {"height", "type", "ballot", "kind", "candidate"});
        EvOpenBallot ev;
        ev.ballot = get_id(e, path, "ballot");
        std::string kind = get_string(e, path, "kind");
        if (kind == "election") {
            ev.kind = governance::BallotKind::Election;
        } else if (kind == "surplus") {
            ev.kind = governance::BallotKind::Surplus;
        } else {
            fail(path + ".kind", "expected 'election' or 'surplus'");
        }
        if (ev.kind == governance::BallotKind::Election) {
            ev.candidate = get_id(e, path, "candidate");
            if (ctx.accounts.count(*ev.candidate) == 0) {
                fail(path + ".candidate",
                     "references undeclared account '" + *ev.candidate + "'");
            }
            ctx.authorities.insert(*ev.candidate);  // may hold a seat later
        } else if (e.find("candidate") != e.end()) {
            fail(path + ".candidate", "only election ballots take a candidate");
        }
        if (ctx.ballots.count(ev.ballot) != 0) {
            fail(path + ".ballot", "ballot '" + ev.ballot + "' already opened");
        }
        ctx.ballots.emplace(ev.ballot, ev.kind);
        ctx.ballot_file_phase[ev.ballot] = 0;
        return ev;
    }

    if (type == "start_reveal" || type == "close_ballot") {
        check_keys(e, path, {"height", "type", "ballot"});
        std::string ballot = get_id(e, path, "ballot");
        if (ctx.ballots.count(ballot) == 0) {
            fail(path + ".ballot", "references undeclared ballot '" + ballot + "'");
        }
        int& phase = ctx.ballot_file_phase[ballot];
        if (type == "start_reveal") {
            if (phase != 0) {
                fail(path, "ballot '" + ballot + "' is past its commit phase here");
            }
            phase = 1;
            return EvStartReveal{ballot};
        }
        if (phase != 1) {
            fail(path, "ballot '" + ballot + "' must enter the reveal phase before closing");
        }
        phase = 2;
        return EvCloseBallot{ballot};
    }

    if (type == "commit") {
        check_keys(e, path, {"height", "type", "ballot", "voter", "digest", "choice", "nonce"});
        EvCommit ev;
        ev.ballot = get_id(e, path, "ballot");
        ev.voter = get_id(e, path, "voter");
        if (ctx.ballots.count(ev.ballot) == 0) {
            fail(path + ".ballot", "references undeclared ballot '" + ev.ballot + "'");
        }
        if (ctx.accounts.count(ev.voter) == 0) {
            fail(path + ".voter", "references undeclared account '" + ev.voter + "'");
        }
        bool has_digest = e.find("digest") != e.end();
        bool has_choice = e.find("choice") != e.end();
        bool has_nonce = e.find("nonce") != e.end();
        if (has_digest && (has_choice || has_nonce)) {
            fail(path, "give either a digest or a choice+nonce pair, not both");
        }
        if (has_digest) {
            ev.digest_hex = get_string(e, path, "digest");
        } else {
            if (!has_choice || !has_nonce) {
                fail(path, "commit needs either a digest or both choice and nonce");
            }
            ev.digest_hex = governance::vote_digest(cfg.digest,
                                                    get_string(e, path, "choice"),
                                                    get_string(e, path, "nonce"));
        }
        if (ctx.ballot_file_phase[ev.ballot] != 0) {
            fail(path, "ballot '" + ev.ballot + "' is past its commit phase here");
        }
        return ev;
    }

    if (type == "reveal") {
        check_keys(e, path, {"height", "type", "ballot", "voter", "choice", "nonce"});
        EvReveal ev;
        ev.ballot = get_id(e, path, "ballot");
        ev.voter = get_id(e, path, "voter");
        ev.choice = get_string(e, path, "choice");
        ev.nonce = get_string(e, path, "nonce");
        if (ctx.ballots.count(ev.ballot) == 0) {
            fail(path + ".ballot", "references undeclared ballot '" + ev.ballot + "'");
        }
        if (ctx.accounts.count(ev.voter) == 0) {
            fail(path + ".voter", "references undeclared account '" + ev.voter + "'");
        }
        if (ctx.ballot_file_phase[ev.ballot] != 1) {
            fail(path, "ballot '" + ev.ballot + "' is not in its reveal phase here");
        }
        return ev;
    }

    if (type == "block_size") {
        check_keys(e, path, {"height", "type", "size"});
        EvBlockSize ev;
        ev.size = get_u64(e, path, "size");
        if (ev.size == 0 || ev.size > 0xFFFFFFFFull) {
            fail(path + ".size", "must be in [1, 2^32-1]");
        }
        return ev;
    }

    if (type == "fault") {
        check_keys(e, path, {"height", "type", "mode", "mint_delta"});
        EvFault ev;
        std::string mode = get_string(e, path, "mode");
        if (mode == "bad_mint") {
            ev.mode = FaultMode::BadMint;
        } else if (mode == "bad_allocation") {
            ev.mode = FaultMode::BadAllocation;
        } else if (mode == "oversize") {
            ev.mode = FaultMode::Oversize;
        } else if (mode == "bad_proposer") {
            ev.mode = FaultMode::BadProposer;
        } else {
            fail(path + ".mode",
                 "expected bad_mint/bad_allocation/oversize/bad_proposer");
        }
        if (auto it = e.find("mint_delta"); it != e.end()) {
            if (ev.mode != FaultMode::BadMint) {
                fail(path + ".mint_delta", "only applies to bad_mint faults");
            }
            if (!it->is_number_integer()) {
                fail(path + ".mint_delta", "expected an integer");
            }
            ev.mint_delta = it->get<std::int64_t>();
            if (ev.mint_delta == 0) {
                fail(path + ".mint_delta", "must be nonzero");
            }
        }
        return ev;
    }

    if (type == "votes") {
        check_keys(e, path, {"height", "type", "voters"});
        const json& arr = require_key(e, path, "voters");
        expect_array(arr, path + ".voters");
        EvVotes ev;
        std::set<std::string> seen;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string vpath = path + ".voters[" + std::to_string(i) + "]";
            std::string voter = as_string(arr[i], vpath);
            if (ctx.authorities.count(voter) == 0) {
                fail(vpath, "references undeclared authority '" + voter + "'");
            }
            if (!seen.insert(voter).second) {
                fail(vpath, "duplicate voter '" + voter + "'");
            }
            ev.voters.push_back(std::move(voter));
        }
        return ev;
    }

    fail(path + ".type", "unknown event type '" + type + "'");
}

}  // namespace

Scenario parse_scenario(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("$: invalid JSON: ") + e.what());
    }
    expect_object(doc, "$");
    check_keys(doc, "$", {"config", "events", "horizon", "seed"});

    Scenario sc;
    if (auto it = doc.find("config"); it != doc.end()) {
        sc.config = parse_config(*it, "$.config");
    }
    check_genesis_funding(sc.config, "$.config");

    sc.horizon = get_u64(doc, "$", "horizon");
    if (sc.horizon > 10'000'000) {
        fail("$.horizon", "must not exceed 10000000");
    }
    sc.seed = get_u64_or(doc, "$", "seed", 0);

    EventContext ctx;
    ctx.accounts.insert(TRANCHE_NAMES.begin(), TRANCHE_NAMES.end());
    for (const auto& acc : sc.config.accounts) {
        ctx.accounts.insert(acc.id);
    }
    for (const auto& auth : sc.config.authorities) {
        ctx.authorities.insert(auth.id);
    }

    const json& events = require_key(doc, "$", "events");
    expect_array(events, "$.events");
    std::uint64_t last_height = 0;
    std::set<std::pair<std::uint64_t, std::string>> singletons;
    for (std::size_t i = 0; i < events.size(); ++i) {
        std::string path = "$.events[" + std::to_string(i) + "]";
        const json& e = events[i];
        expect_object(e, path);
        std::uint64_t height = get_u64(e, path, "height");
        if (height == 0) {
            fail(path + ".height", "slots are 1-based");
        }
        if (height > sc.horizon) {
            fail(path + ".height", "beyond the scenario horizon of " +
                                   std::to_string(sc.horizon));
        }
        if (height < last_height) {
            fail(path + ".height", "events must be ordered by non-decreasing height");
        }
        last_height = height;

        EventPayload payload = parse_event_payload(e, path, sc.config, ctx);

        // At most one block-shaping event of each kind per slot; later ones
        // would silently shadow earlier ones otherwise.
        const char* singleton = nullptr;
        if (std::holds_alternative<EvBlockSize>(payload)) {
            singleton = "block_size";
        } else if (std::holds_alternative<EvFault>(payload)) {
            singleton = "fault";
        } else if (std::holds_alternative<EvVotes>(payload)) {
            singleton = "votes";
        }
        if (singleton != nullptr &&
            !singletons.insert({height, std::string(singleton)}).second) {
            fail(path, std::string("duplicate ") + singleton + " event in slot " +
                       std::to_string(height));
        }

        sc.events.push_back(Event{height, std::move(payload)});
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw ScenarioError("$: cannot open scenario file '" + file.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace fire::scenario
