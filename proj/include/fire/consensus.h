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
#include "fire/governance.h"
#include "fire/rational.h"
#include "fire/settlement.h"

namespace fire::ledger {
struct ChainState;
}

namespace fire::consensus {

// A senator in the proof-of-authority set. Slashing vaporizes the stake and
// deactivates the record; the record itself stays so the id can never be
// re-admitted within a run.
struct Authority {
    AuthorityId id;
    FireAmount stake = 0;
    bool active = true;
};

// A block as proposed. declared_mint and declared_allocation are the
// proposer's claims; validation recomputes both from state and compares, so a
// dishonest proposer is caught by construction. declared_allocation may be
// omitted (honest proposers may leave it implicit); when present it must
// match the recomputed per-campaign credit totals exactly.
struct Block {
    std::uint64_t height = 0;
    AuthorityId proposer;
    std::uint64_t size_bytes = 0;
    std::vector<settlement::ComputeShare> shares;
    FireAmount declared_mint = 0;
    std::optional<std::map<CampaignId, FireAmount>> declared_allocation;
    std::set<AuthorityId> votes;
};

// Why a block failed validation. Checks run in a fixed order so a block wrong
// in several ways reports deterministically: proposer, then size, then mint,
// then allocation.
enum class VerdictReason { None, BadProposer, Oversize, BadMint, BadAllocation };

const char* to_string(VerdictReason r);

struct ValidationVerdict {
    bool valid = true;
    VerdictReason reason = VerdictReason::None;
};

// Votes needed to finalize among `active_count` authorities:
// ceil(active_count * fraction), default two thirds.
std::uint64_t quorum(std::uint64_t active_count, const Rational& fraction = Rational{2, 3});

// Round-robin proposer: the active set ordered by id, indexed by height mod
// count. Empty set is a StateError.
const AuthorityId& proposer_for_height(const std::vector<AuthorityId>& active_sorted,
                                       std::uint64_t height);

// Informational split of a block's compute units across senators: near-equal
// integer parts with the rounding extras rotating by height, so no senator is
// systematically favored. These are compute units, never tokens.
std::map<AuthorityId, std::uint64_t> split_compute(std::uint64_t total_units,
                                                   const std::vector<AuthorityId>& active_sorted,
                                                   std::uint64_t height);

// Full validity check of `block` against `state` (expected proposer, size cap
// against the rolling median, declared mint against the penalized reward,
// declared allocation against the recomputed accrual).
ValidationVerdict validate_block(const ledger::ChainState& state, const Block& block);

// Stake of a misbehaving authority is vaporized (burned back into the
// mintable pool) and the seat deactivated. Unknown or already-slashed ids are
// StateErrors.
void slash_authority(ledger::ChainState& state, const AuthorityId& id);

// Seats a new authority after a passed election: debits the candidate's
// account by the configured minimum stake and activates the seat. The
// candidate must not collide with any authority record, active or slashed.
void admit_authority(ledger::ChainState& state, const AccountId& candidate);

struct SettlementRecord {
    std::uint64_t height = 0;
    CampaignId campaign;
    settlement::SettlementOutcome outcome;
};

struct FinalizeOutcome {
    bool finalized = false;
    ValidationVerdict verdict;
    std::uint64_t votes = 0;
    std::uint64_t quorum_needed = 0;
    std::vector<AuthorityId> slashed;       // applied to state already
    FireAmount minted = 0;                  // credited by this block
    FireAmount dropped = 0;                 // reward share nobody had capacity for
    std::vector<SettlementRecord> settlements;
};

// Drives one block through the vote: with quorum and a valid block the state
// advances (mint accrual, due settlements, height, size history); an invalid
// block with quorum slashes every voter plus the proposer; an invalid block
// short of quorum slashes the proposer alone; a valid block short of quorum
// is simply discarded. Slashes are applied to `state` before returning.
FinalizeOutcome finalize_block(ledger::ChainState& state, const Block& block);

}  // namespace fire::consensus
