// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fire/amount.h"

namespace fire::emission {

// Global token-supply counters plus the emission-curve parameters. `minted`
// (A) only ever grows; `vaporized` (R) tracks tokens burned back into the
// mintable pool, so the circulating supply is minted - vaporized and the block
// reward curve is driven by msupply - (minted - vaporized).
struct EmissionState {
    FireAmount msupply = MAX_SUPPLY;
    FireAmount minted = 0;
    FireAmount vaporized = 0;
    unsigned speed_factor = 23;          // right-shift applied to the remaining pool
    std::uint64_t block_interval_s = 10; // informational; fixes the calendar scale
    std::size_t median_window = 100;     // trailing blocks considered by the size median

    FireAmount circulating() const { return minted - vaporized; }

    void validate() const;  // throws ConfigError on out-of-range parameters
};

// Base block reward before any size penalty:
//   floor((msupply - (minted - vaporized)) / 2^speed_factor).
// Vaporized tokens re-enter this pool, which is what makes the supply
// recyclable rather than strictly capped per block height.
FireAmount base_reward(const EmissionState& st);

// Supply movements. Both enforce the accounting order: vaporized <= minted <=
// msupply at all times; violations throw AccountingError.
void mint(EmissionState& st, FireAmount amount);
void vaporize(EmissionState& st, FireAmount amount);

// Reward after the oversize penalty. Blocks at or below the median carry the
// full reward; on (median, 2*median] the reward scales by 1 - ((size-m)/m)^2,
// computed exactly as base * size * (2m - size) / m^2 through 128-bit
// intermediates; beyond 2*median the block is invalid (StateError). The median
// must be positive and fit in 32 bits so that m^2 products stay exact.
FireAmount penalized_reward(FireAmount base, std::uint64_t block_size, std::uint64_t median);

// Median of the trailing `window` entries (all entries when fewer exist),
// lower-middle element for even counts. Empty history is a StateError.
std::uint64_t rolling_median(std::span<const std::uint64_t> sizes, std::size_t window);

// Premine split in permille of the premined total, in the order the tranches
// are paid. validate() checks the parts sum to exactly 1000.
struct PremineSplit {
    std::uint32_t development = 600;
    std::uint32_t developers_locked = 120;
    std::uint32_t foundation = 100;
    std::uint32_t team = 100;
    std::uint32_t community = 50;
    std::uint32_t advisors = 30;

    void validate() const;
};

struct PremineAllocation {
    std::string account;  // tranche name, doubles as the genesis account id
    FireAmount amount = 0;
    bool locked = false;  // the developers tranche vests locked
};

// Integer-exact genesis allocation: premine_coins whole coins split by
// permille weights via largest remainder (ties to the earlier tranche).
// Throws ConfigError if the premine exceeds msupply or the split is invalid.
std::vector<PremineAllocation> genesis_premine(const PremineSplit& split,
                                               std::uint64_t premine_coins,
                                               FireAmount msupply = MAX_SUPPLY);

struct EmissionPoint {
    std::uint64_t height = 0;
    FireAmount reward = 0;  // minted by this block
    FireAmount minted = 0;  // cumulative after this block
};

// Pure emission schedule: `blocks` heights of full base rewards, no penalties,
// no vaporization. The input state is not modified; the returned series
// carries the running totals.
std::vector<EmissionPoint> simulate_emission(const EmissionState& start, std::uint64_t blocks);

}  // namespace fire::emission
