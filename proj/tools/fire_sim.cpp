// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
//
// fire-sim: deterministic simulator for the FIRE token economy.
//
//   fire-sim run --scenario FILE --out DIR     run a scenario, write reports
//   fire-sim emission --blocks N --out FILE    pure emission schedule as CSV
//   fire-sim validate --scenario FILE          parse and validate only
//
// Exit codes: 0 success; 1 scenario/config validation failure (including
// unreadable inputs and unwritable outputs); 2 protocol rule violation or
// conservation failure during a run.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fire/emission.h"
#include "fire/errors.h"
#include "fire/scenario.h"
#include "fire/simulation.h"

namespace {

int cmd_run(const std::string& scenario_file, const std::string& out_dir, bool quiet)
{
    fire::scenario::Scenario sc = fire::scenario::load_scenario(scenario_file);
    fire::sim::RunReport report = fire::sim::run_scenario(sc);
    fire::sim::emit_reports(report, out_dir);
    if (!quiet) {
        std::cout << report.summary;
        std::cout << "state_digest=" << report.digest << "\n";
    }
    return 0;
}

int cmd_emission(std::uint64_t blocks, std::uint64_t premine_coins, unsigned speed_factor,
                 const std::string& out_file)
{
    fire::emission::EmissionState st;
    st.speed_factor = speed_factor;
    std::vector<fire::emission::PremineAllocation> premine =
        fire::emission::genesis_premine(fire::emission::PremineSplit{}, premine_coins);
    fire::FireAmount premine_total = 0;
    for (const auto& tranche : premine) {
        premine_total = fire::checked_add(premine_total, tranche.amount);
    }
    fire::emission::mint(st, premine_total);

    std::vector<fire::emission::EmissionPoint> series =
        fire::emission::simulate_emission(st, blocks);

    std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw fire::ScenarioError("cannot write '" + out_file + "'");
    }
    out << "height,reward_atomic,minted_atomic,vaporized_atomic,circulating_atomic\n";
    for (const auto& p : series) {
        // The pure schedule never vaporizes, so circulating equals minted.
        out << p.height << "," << p.reward << "," << p.minted << ",0," << p.minted << "\n";
    }
    if (!out) {
        throw fire::ScenarioError("short write on '" + out_file + "'");
    }
    return 0;
}

int cmd_validate(const std::string& scenario_file, bool quiet)
{
    fire::scenario::load_scenario(scenario_file);
    if (!quiet) {
        std::cout << "scenario ok\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"deterministic FIRE economy simulator"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "suppress the summary on stdout");

    auto* run = app.add_subcommand("run", "run a scenario and write report files");
    run->fallthrough();  // lets --quiet trail the subcommand
    std::string run_scenario_file;
    std::string run_out_dir;
    run->add_option("--scenario", run_scenario_file, "scenario JSON file")->required();
    run->add_option("--out", run_out_dir, "output directory for the report files")
        ->required();

    auto* emission = app.add_subcommand("emission", "write the pure emission schedule");
    emission->fallthrough();
    std::uint64_t blocks = 0;
    std::uint64_t premine_coins = 0;
    unsigned speed_factor = 23;
    std::string emission_out;
    emission->add_option("--blocks", blocks, "number of blocks to emit")->required();
    emission->add_option("--premine-coins", premine_coins,
                         "whole coins premined before block 1 (default 0)");
    emission->add_option("--speed-factor", speed_factor,
                         "emission speed factor (default 23)");
    emission->add_option("--out", emission_out, "CSV output file")->required();

    auto* validate = app.add_subcommand("validate", "validate a scenario file");
    validate->fallthrough();
    std::string validate_scenario_file;
    validate->add_option("--scenario", validate_scenario_file, "scenario JSON file")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(run_scenario_file, run_out_dir, quiet);
        }
        if (emission->parsed()) {
            return cmd_emission(blocks, premine_coins, speed_factor, emission_out);
        }
        return cmd_validate(validate_scenario_file, quiet);
    } catch (const fire::ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const fire::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const fire::Error& e) {
        // Rule violations and conservation failures inside a run.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
