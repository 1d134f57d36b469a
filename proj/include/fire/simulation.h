// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "fire/ledger.h"
#include "fire/scenario.h"

namespace fire::sim {

// Everything a run produces. The CSV logs are kept in memory (runs are
// scenario-sized, not open-ended) so tests can compare them byte for byte;
// emit_reports writes them out.
struct RunReport {
    std::string emission_csv;       // height,reward_atomic,minted_atomic,...
    std::string settlements_csv;    // one row per settled campaign
    std::string blocks_csv;         // one row per attempted block
    std::string ballots_csv;        // one row per ballot, final states
    std::string surplus_rounds_csv; // one row per redistribution round
    std::string summary;            // key=value lines
    std::string digest;             // hex digest of the canonical final state
    ledger::ChainState final_state;
    std::map<AuthorityId, std::uint64_t> compute_units;  // informational split
};

// Builds the genesis state for a scenario: premine minted into the six
// tranche accounts, declared accounts and authority stakes funded from their
// tranches, the size history seeded with the default block size.
ledger::ChainState genesis_state(const scenario::Scenario& sc);

// Runs the scenario start to finish. Deterministic: equal scenarios produce
// byte-identical reports. Throws on rule violations (StateError and friends)
// and on conservation drift (InvariantError).
RunReport run_scenario(const scenario::Scenario& sc);

// Writes the six report files into out_dir (created if missing):
// emission.csv, settlements.csv, blocks.csv, ballots.csv, surplus_rounds.csv,
// summary.txt.
void emit_reports(const RunReport& report, const std::filesystem::path& out_dir);

// Canonical digest of a chain state; covers every field that can influence
// future evolution, so two states with equal digests continue identically.
std::string state_digest(const ledger::ChainState& st);

// Re-executes the scenario and checks the regenerated block log and state
// digest against a previous run's report; throws InvariantError on any
// difference. Returns the fresh report.
RunReport replay_verify(const scenario::Scenario& sc, const RunReport& original);

}  // namespace fire::sim
