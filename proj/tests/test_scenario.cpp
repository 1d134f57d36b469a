// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <string>
#include <variant>

#include <doctest.h>
#include <json.hpp>

#include "fire/errors.h"
#include "fire/governance.h"
#include "fire/scenario.h"

using namespace fire;
using namespace fire::scenario;
using nlohmann::json;

namespace {

// A small but fully populated document every error test mutates from.
json base_doc()
{
    return json{
        {"config",
         {{"premine_coins", 1'000'000},
          {"digest", "plain"},
          {"citizen_lock_threshold", 1000},
          {"min_authority_stake", 5000},
          {"authorities",
           json::array({{{"id", "s1"}, {"stake", 5000}, {"funded_by", "development"}},
                        {{"id", "s2"}, {"stake", 5000}, {"funded_by", "development"}}})},
          {"accounts",
           json::array({{{"id", "alice"}, {"balance", 100000}, {"funded_by", "community"}},
                        {{"id", "bob"}, {"balance", 50000}, {"funded_by", "community"}}})}}},
        {"horizon", 10},
        {"events", json::array()},
    };
}

void expect_error(const json& doc, const std::string& needle)
{
    try {
        parse_scenario(doc.dump());
        FAIL_CHECK("expected a scenario error mentioning '" << needle << "', but parsing passed");
    } catch (const ScenarioError& e) {
        std::string what = e.what();
        INFO("diagnostic was: " << what);
        CHECK(what.find(needle) != std::string::npos);
    }
}

json ev(std::initializer_list<std::pair<std::string, json>> kv)
{
    json e = json::object();
    for (const auto& [k, v] : kv) {
        e[k] = v;
    }
    return e;
}

}  // namespace

TEST_CASE("a minimal document parses with defaults")
{
    json doc = base_doc();
    Scenario sc = parse_scenario(doc.dump());
    CHECK(sc.horizon == 10);
    CHECK(sc.seed == 0);
    CHECK(sc.events.empty());
    CHECK(sc.config.speed_factor == 23);
    CHECK(sc.config.median_window == 100);
    CHECK(sc.config.premine_coins == 1'000'000);
    CHECK(sc.config.digest == governance::DigestKind::Plain);
    CHECK(sc.config.quorum_fraction == Rational(2, 3));
    CHECK(sc.config.election_fraction == Rational(3, 4));
    CHECK(sc.config.authorities.size() == 2);
    CHECK(sc.config.accounts.size() == 2);
    CHECK(sc.config.rank_table.citizen_lock_threshold == 1000);
}

TEST_CASE("digest defaults to sha256 when absent")
{
    json doc = base_doc();
    doc["config"].erase("digest");
    Scenario sc = parse_scenario(doc.dump());
    CHECK(sc.config.digest == governance::DigestKind::Sha256);
}

TEST_CASE("invalid JSON is a scenario error")
{
    CHECK_THROWS_AS(parse_scenario("{ nope"), ScenarioError);
    expect_error(json::array(), "$: expected an object");
}

TEST_CASE("unknown keys are hard errors that name the path")
{
    SUBCASE("top level")
    {
        json doc = base_doc();
        doc["horizen"] = 5;
        expect_error(doc, "$.horizen: unknown key");
    }
    SUBCASE("config")
    {
        json doc = base_doc();
        doc["config"]["speedfactor"] = 23;
        expect_error(doc, "$.config.speedfactor: unknown key");
    }
    SUBCASE("event")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1},
                                    {"type", "transfer"},
                                    {"from", "alice"},
                                    {"to", "bob"},
                                    {"amount", 1},
                                    {"memo", "hi"}}));
        expect_error(doc, "$.events[0].memo: unknown key");
    }
    SUBCASE("misspelled required event key reads as missing plus unknown")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1},
                                    {"type", "transfer"},
                                    {"fromm", "alice"},
                                    {"to", "bob"},
                                    {"amount", 1}}));
        expect_error(doc, "$.events[0].fromm: unknown key");
    }
}

TEST_CASE("top-level structure rules")
{
    SUBCASE("horizon is required")
    {
        json doc = base_doc();
        doc.erase("horizon");
        expect_error(doc, "missing required key 'horizon'");
    }
    SUBCASE("horizon is capped")
    {
        json doc = base_doc();
        doc["horizon"] = 10'000'001;
        expect_error(doc, "$.horizon: must not exceed 10000000");
    }
    SUBCASE("events must be an array")
    {
        json doc = base_doc();
        doc["events"] = json::object();
        expect_error(doc, "$.events: expected an array");
    }
    SUBCASE("seed must be a non-negative integer")
    {
        json doc = base_doc();
        doc["seed"] = -3;
        expect_error(doc, "$.seed: expected a non-negative integer");
    }
    SUBCASE("negative amounts never parse as u64")
    {
        json doc = base_doc();
        doc["config"]["premine_coins"] = -1;
        expect_error(doc, "$.config.premine_coins: expected a non-negative integer");
    }
}

TEST_CASE("config validation")
{
    SUBCASE("speed factor range")
    {
        json doc = base_doc();
        doc["config"]["speed_factor"] = 0;
        expect_error(doc, "$.config.speed_factor: must be in [1, 63]");
        doc["config"]["speed_factor"] = 64;
        expect_error(doc, "$.config.speed_factor: must be in [1, 63]");
    }
    SUBCASE("median window range")
    {
        json doc = base_doc();
        doc["config"]["median_window"] = 0;
        expect_error(doc, "$.config.median_window");
        doc["config"]["median_window"] = 1'000'001;
        expect_error(doc, "$.config.median_window");
    }
    SUBCASE("premine cap")
    {
        json doc = base_doc();
        doc["config"]["premine_coins"] = 1'844'674'408ull;   // one over the cap
        expect_error(doc, "$.config.premine_coins: premine exceeds the money supply");
    }
    SUBCASE("premine split must cover all six tranches and sum to 1000")
    {
        json doc = base_doc();
        doc["config"]["premine_split_permille"] = {
            {"development", 700}, {"developers_locked", 120}, {"foundation", 100},
            {"team", 100},        {"community", 50},          {"advisors", 30}};
        expect_error(doc, "permille parts must sum to 1000, got 1100");
        doc["config"]["premine_split_permille"] = {{"development", 1000}};
        expect_error(doc, "missing required key");
    }
    SUBCASE("default block size range")
    {
        json doc = base_doc();
        doc["config"]["default_block_size"] = 0;
        expect_error(doc, "$.config.default_block_size: must be in [1, 2^32-1]");
        doc["config"]["default_block_size"] = 0x1'0000'0000ull;
        expect_error(doc, "$.config.default_block_size");
    }
    SUBCASE("fractions")
    {
        json doc = base_doc();
        doc["config"]["quorum_fraction"] = {{"num", 1}, {"den", 0}};
        expect_error(doc, "$.config.quorum_fraction.den: denominator must be positive");
        doc["config"]["quorum_fraction"] = {{"num", 4}, {"den", 3}};
        expect_error(doc, "$.config.quorum_fraction: must be in (0, 1]");
        doc["config"]["quorum_fraction"] = {{"num", 0}, {"den", 3}};
        expect_error(doc, "$.config.quorum_fraction: must be in (0, 1]");
        doc["config"]["quorum_fraction"] = {{"num", 2}, {"den", 3}, {"x", 1}};
        expect_error(doc, "$.config.quorum_fraction.x: unknown key");
        doc["config"]["quorum_fraction"] = {{"num", 1}, {"den", 0x1'0000'0000ull}};
        expect_error(doc, "denominator must fit in 32 bits");
    }
    SUBCASE("digest scheme")
    {
        json doc = base_doc();
        doc["config"]["digest"] = "md5";
        expect_error(doc, "$.config.digest: expected 'sha256' or 'plain'");
    }
    SUBCASE("rank table must start at the entry rung")
    {
        json doc = base_doc();
        doc["config"]["rank_table"] = json::array(
            {{{"title", "tourist"}, {"level", 1}, {"min_points", 5}},
             {{"title", "citizen"}, {"level", 1}, {"min_points", 50}}});
        expect_error(doc, "$.config.rank_table");
    }
    SUBCASE("rank table rejects unknown titles and silly levels")
    {
        json doc = base_doc();
        doc["config"]["rank_table"] = json::array(
            {{{"title", "peasant"}, {"level", 1}, {"min_points", 0}}});
        expect_error(doc, "unknown title 'peasant'");
        doc["config"]["rank_table"] = json::array(
            {{{"title", "tourist"}, {"level", 0}, {"min_points", 0}}});
        expect_error(doc, "level: must be in [1, 100]");
    }
}

TEST_CASE("genesis account and authority declarations")
{
    SUBCASE("malformed ids")
    {
        json doc = base_doc();
        doc["config"]["accounts"][0]["id"] = "no spaces";
        expect_error(doc, "ids must match [A-Za-z0-9_.-]{1,64}");
        doc["config"]["accounts"][0]["id"] = std::string(65, 'a');
        expect_error(doc, "ids must match");
        doc["config"]["accounts"][0]["id"] = std::string(64, 'a');
        CHECK_NOTHROW(parse_scenario(doc.dump()));
    }
    SUBCASE("duplicate account ids")
    {
        json doc = base_doc();
        doc["config"]["accounts"][1]["id"] = "alice";
        expect_error(doc, "duplicate account id 'alice'");
    }
    SUBCASE("an account may not shadow a tranche name")
    {
        json doc = base_doc();
        doc["config"]["accounts"][0]["id"] = "foundation";
        expect_error(doc, "duplicate account id 'foundation'");
    }
    SUBCASE("funded_by must name a tranche")
    {
        json doc = base_doc();
        doc["config"]["accounts"][0]["funded_by"] = "alice";
        expect_error(doc, "'alice' is not a premine tranche");
    }
    SUBCASE("the locked developers tranche cannot fund anyone")
    {
        json doc = base_doc();
        doc["config"]["accounts"][0]["funded_by"] = "developers_locked";
        expect_error(doc, "the developers tranche is locked and cannot fund");
        doc = base_doc();
        doc["config"]["authorities"][0]["funded_by"] = "developers_locked";
        expect_error(doc, "the developers tranche is locked and cannot fund");
    }
    SUBCASE("tranche overdraw is caught at parse time")
    {
        json doc = base_doc();
        // advisors tranche holds 3% of 10^6 coins = 3 * 10^14 atomic.
        doc["config"]["accounts"][0]["funded_by"] = "advisors";
        doc["config"]["accounts"][0]["balance"] = 300'000'000'000'001ull;
        expect_error(doc, "tranche 'advisors' cannot fund account 'alice'");
    }
    SUBCASE("authority stakes must be positive")
    {
        json doc = base_doc();
        doc["config"]["authorities"][0]["stake"] = 0;
        expect_error(doc, "authority stake must be positive");
    }
    SUBCASE("duplicate authority ids")
    {
        json doc = base_doc();
        doc["config"]["authorities"][1]["id"] = "s1";
        expect_error(doc, "duplicate authority id 's1'");
    }
}

TEST_CASE("event stream ordering")
{
    json donation = ev({{"height", 2},
                        {"type", "transfer"},
                        {"from", "alice"},
                        {"to", "bob"},
                        {"amount", 5}});
    SUBCASE("heights are 1-based")
    {
        json doc = base_doc();
        json e = donation;
        e["height"] = 0;
        doc["events"].push_back(e);
        expect_error(doc, "slots are 1-based");
    }
    SUBCASE("heights beyond the horizon are rejected")
    {
        json doc = base_doc();
        json e = donation;
        e["height"] = 11;
        doc["events"].push_back(e);
        expect_error(doc, "beyond the scenario horizon of 10");
    }
    SUBCASE("heights must be non-decreasing")
    {
        json doc = base_doc();
        json e = donation;
        doc["events"].push_back(e);
        e["height"] = 1;
        doc["events"].push_back(e);
        expect_error(doc, "events must be ordered by non-decreasing height");
    }
    SUBCASE("unknown event type")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1}, {"type", "bribe"}}));
        expect_error(doc, "unknown event type 'bribe'");
    }
}

TEST_CASE("campaign and share events")
{
    json create = ev({{"height", 1},
                      {"type", "create_campaign"},
                      {"id", "c1"},
                      {"orator", "alice"},
                      {"required_amount", 1000},
                      {"deadline_height", 8}});
    SUBCASE("creating twice is rejected")
    {
        json doc = base_doc();
        doc["events"].push_back(create);
        doc["events"].push_back(create);
        expect_error(doc, "campaign 'c1' already created");
    }
    SUBCASE("unknown orator")
    {
        json doc = base_doc();
        json e = create;
        e["orator"] = "nobody";
        doc["events"].push_back(e);
        expect_error(doc, "references undeclared account 'nobody'");
    }
    SUBCASE("zero goal or deadline")
    {
        json doc = base_doc();
        json e = create;
        e["required_amount"] = 0;
        doc["events"].push_back(e);
        expect_error(doc, "required_amount: must be positive");
        doc = base_doc();
        e = create;
        e["deadline_height"] = 0;
        doc["events"].push_back(e);
        expect_error(doc, "deadline_height: must be positive");
    }
    SUBCASE("shares must name existing campaigns and backers")
    {
        json doc = base_doc();
        doc["events"].push_back(create);
        doc["events"].push_back(
            ev({{"height", 2},
                {"type", "compute_shares"},
                {"shares", json::array({{{"backer", "bob"}, {"campaign", "c9"}, {"units", 3}}})}}));
        expect_error(doc, "references undeclared campaign 'c9'");

        doc["events"][1]["shares"][0]["campaign"] = "c1";
        doc["events"][1]["shares"][0]["backer"] = "ghost";
        expect_error(doc, "references undeclared account 'ghost'");

        doc["events"][1]["shares"][0]["backer"] = "bob";
        doc["events"][1]["shares"][0]["units"] = 0;
        expect_error(doc, "units: must be positive");

        doc["events"][1]["shares"] = json::array();
        expect_error(doc, "shares: must not be empty");
    }
    SUBCASE("donations check both references")
    {
        json doc = base_doc();
        doc["events"].push_back(create);
        doc["events"].push_back(ev({{"height", 2},
                                    {"type", "direct_donation"},
                                    {"from", "ghost"},
                                    {"campaign", "c1"},
                                    {"amount", 10}}));
        expect_error(doc, "references undeclared account 'ghost'");
        doc["events"][1]["from"] = "bob";
        doc["events"][1]["campaign"] = "cx";
        expect_error(doc, "references undeclared campaign 'cx'");
    }
    SUBCASE("tranche accounts can act in events")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1},
                                    {"type", "transfer"},
                                    {"from", "community"},
                                    {"to", "alice"},
                                    {"amount", 100}}));
        CHECK_NOTHROW(parse_scenario(doc.dump()));
    }
}

TEST_CASE("ballot events")
{
    json open_surplus = ev({{"height", 1}, {"type", "open_ballot"},
                            {"ballot", "b1"}, {"kind", "surplus"}});
    json open_election = ev({{"height", 1}, {"type", "open_ballot"},
                             {"ballot", "e1"}, {"kind", "election"}, {"candidate", "alice"}});

    SUBCASE("elections need a candidate, surplus ballots refuse one")
    {
        json doc = base_doc();
        json e = open_election;
        e.erase("candidate");
        doc["events"].push_back(e);
        expect_error(doc, "missing required key 'candidate'");

        doc = base_doc();
        e = open_surplus;
        e["candidate"] = "alice";
        doc["events"].push_back(e);
        expect_error(doc, "only election ballots take a candidate");

        doc = base_doc();
        e = open_surplus;
        e["kind"] = "plebiscite";
        doc["events"].push_back(e);
        expect_error(doc, "expected 'election' or 'surplus'");
    }
    SUBCASE("ballot ids are unique")
    {
        json doc = base_doc();
        doc["events"].push_back(open_surplus);
        doc["events"].push_back(open_surplus);
        expect_error(doc, "ballot 'b1' already opened");
    }
    SUBCASE("phase bookkeeping is checked in file order")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1}, {"type", "start_reveal"}, {"ballot", "b1"}}));
        expect_error(doc, "references undeclared ballot 'b1'");

        doc = base_doc();
        doc["events"].push_back(open_surplus);
        doc["events"].push_back(ev({{"height", 2}, {"type", "close_ballot"}, {"ballot", "b1"}}));
        expect_error(doc, "must enter the reveal phase before closing");

        doc = base_doc();
        doc["events"].push_back(open_surplus);
        doc["events"].push_back(ev({{"height", 2}, {"type", "start_reveal"}, {"ballot", "b1"}}));
        doc["events"].push_back(ev({{"height", 3}, {"type", "start_reveal"}, {"ballot", "b1"}}));
        expect_error(doc, "past its commit phase");
    }
    SUBCASE("commits take a digest or the choice+nonce sugar, never both")
    {
        json doc = base_doc();
        doc["events"].push_back(open_surplus);
        doc["events"].push_back(ev({{"height", 1},
                                    {"type", "commit"},
                                    {"ballot", "b1"},
                                    {"voter", "alice"},
                                    {"digest", "plain:c1\nn"},
                                    {"choice", "c1"}}));
        expect_error(doc, "give either a digest or a choice+nonce pair, not both");

        doc["events"][1].erase("digest");
        expect_error(doc, "commit needs either a digest or both choice and nonce");

        doc["events"][1]["nonce"] = "n1";
        Scenario sc = parse_scenario(doc.dump());
        const auto* commit = std::get_if<EvCommit>(&sc.events[1].payload);
        REQUIRE(commit != nullptr);
        // The sugar resolves through the configured digest scheme (plain here).
        CHECK(commit->digest_hex == governance::vote_digest(governance::DigestKind::Plain,
                                                            "c1", "n1"));
    }
    SUBCASE("commits after the reveal opens are file errors")
    {
        json doc = base_doc();
        doc["events"].push_back(open_surplus);
        doc["events"].push_back(ev({{"height", 2}, {"type", "start_reveal"}, {"ballot", "b1"}}));
        doc["events"].push_back(ev({{"height", 3},
                                    {"type", "commit"},
                                    {"ballot", "b1"},
                                    {"voter", "alice"},
                                    {"choice", "x"},
                                    {"nonce", "n"}}));
        expect_error(doc, "past its commit phase");
    }
    SUBCASE("reveals only inside the reveal phase")
    {
        json doc = base_doc();
        doc["events"].push_back(open_surplus);
        doc["events"].push_back(ev({{"height", 2},
                                    {"type", "reveal"},
                                    {"ballot", "b1"},
                                    {"voter", "alice"},
                                    {"choice", "x"},
                                    {"nonce", "n"}}));
        expect_error(doc, "not in its reveal phase");
    }
    SUBCASE("an election candidate may vote as an authority later")
    {
        json doc = base_doc();
        doc["events"].push_back(open_election);
        doc["events"].push_back(ev({{"height", 2},
                                    {"type", "votes"},
                                    {"voters", json::array({"s1", "s2", "alice"})}}));
        CHECK_NOTHROW(parse_scenario(doc.dump()));
    }
}

TEST_CASE("block shaping events")
{
    SUBCASE("block size bounds")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1}, {"type", "block_size"}, {"size", 0}}));
        expect_error(doc, "size: must be in [1, 2^32-1]");
    }
    SUBCASE("fault modes")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1}, {"type", "fault"}, {"mode", "griefing"}}));
        expect_error(doc, "expected bad_mint/bad_allocation/oversize/bad_proposer");
    }
    SUBCASE("mint_delta rules")
    {
        json doc = base_doc();
        doc["events"].push_back(
            ev({{"height", 1}, {"type", "fault"}, {"mode", "oversize"}, {"mint_delta", 2}}));
        expect_error(doc, "mint_delta: only applies to bad_mint faults");

        doc = base_doc();
        doc["events"].push_back(
            ev({{"height", 1}, {"type", "fault"}, {"mode", "bad_mint"}, {"mint_delta", 0}}));
        expect_error(doc, "mint_delta: must be nonzero");

        doc = base_doc();
        doc["events"].push_back(
            ev({{"height", 1}, {"type", "fault"}, {"mode", "bad_mint"}, {"mint_delta", 1.5}}));
        expect_error(doc, "mint_delta: expected an integer");

        doc = base_doc();
        doc["events"].push_back(
            ev({{"height", 1}, {"type", "fault"}, {"mode", "bad_mint"}, {"mint_delta", -5}}));
        Scenario sc = parse_scenario(doc.dump());
        const auto* fault = std::get_if<EvFault>(&sc.events[0].payload);
        REQUIRE(fault != nullptr);
        CHECK(fault->mode == FaultMode::BadMint);
        CHECK(fault->mint_delta == -5);
    }
    SUBCASE("votes must name declared authorities, once each")
    {
        json doc = base_doc();
        doc["events"].push_back(
            ev({{"height", 1}, {"type", "votes"}, {"voters", json::array({"s1", "sX"})}}));
        expect_error(doc, "references undeclared authority 'sX'");

        doc = base_doc();
        doc["events"].push_back(
            ev({{"height", 1}, {"type", "votes"}, {"voters", json::array({"s1", "s1"})}}));
        expect_error(doc, "duplicate voter 's1'");
    }
    SUBCASE("one block-shaping event of each kind per slot")
    {
        json doc = base_doc();
        doc["events"].push_back(ev({{"height", 1}, {"type", "block_size"}, {"size", 300}}));
        doc["events"].push_back(ev({{"height", 1}, {"type", "block_size"}, {"size", 400}}));
        expect_error(doc, "duplicate block_size event in slot 1");

        doc = base_doc();
        doc["events"].push_back(ev({{"height", 2}, {"type", "fault"}, {"mode", "oversize"}}));
        doc["events"].push_back(ev({{"height", 2}, {"type", "fault"}, {"mode", "bad_mint"}}));
        expect_error(doc, "duplicate fault event in slot 2");

        // The same kinds in different slots are fine.
        doc = base_doc();
        doc["events"].push_back(ev({{"height", 1}, {"type", "block_size"}, {"size", 300}}));
        doc["events"].push_back(ev({{"height", 2}, {"type", "block_size"}, {"size", 400}}));
        CHECK_NOTHROW(parse_scenario(doc.dump()));
    }
}

TEST_CASE("load_scenario surfaces missing files")
{
    CHECK_THROWS_AS(load_scenario("/nonexistent/dir/sc.json"), ScenarioError);
}

TEST_CASE("the shipped example scenarios parse")
{
    CHECK_NOTHROW(load_scenario(FIRE_SCENARIO_DIR "/basic_campaign.json"));
    CHECK_NOTHROW(load_scenario(FIRE_SCENARIO_DIR "/fault_slash.json"));
    CHECK_THROWS_AS(load_scenario(FIRE_SCENARIO_DIR "/invalid_unknown_key.json"),
                    ScenarioError);
}
