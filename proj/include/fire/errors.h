// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <stdexcept>
#include <string>

namespace fire {

// Base class for every error raised by the simulator. Callers that only care
// about "something is wrong with this run" can catch this one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic left the 64-bit range (or a config pushed an intermediate past
// what the exact-integer paths can guarantee).
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// A supply or balance rule would be violated: vaporizing more than circulates,
// minting past the supply cap, debiting more than an account holds.
class AccountingError : public Error {
public:
    explicit AccountingError(const std::string& what) : Error(what) {}
};

// Static configuration is rejected (bad premine split, non-monotone rank
// table, zero denominators and the like).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// An operation was applied in a state that forbids it: settling a settled
// campaign, revealing before the reveal phase, donating past a campaign cap.
class StateError : public Error {
public:
    explicit StateError(const std::string& what) : Error(what) {}
};

// Scenario file problems: malformed JSON, unknown keys, dangling references.
// The message carries a JSON-path style location for diagnostics.
class ScenarioError : public Error {
public:
    explicit ScenarioError(const std::string& what) : Error(what) {}
};

// A mid-run cross-check failed (ledger total drifted from minted - vaporized).
// Raising this aborts the run; it always indicates a simulator bug or a
// scenario that corrupted state in a way the rules should have prevented.
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what) : Error(what) {}
};

}  // namespace fire
