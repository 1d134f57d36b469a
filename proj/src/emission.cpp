// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/emission.h"

#include <algorithm>

#include "fire/errors.h"
#include "fire/prorata.h"

namespace fire::emission {

void EmissionState::validate() const
{
    if (speed_factor == 0 || speed_factor > 63) {
        throw ConfigError("speed_factor must be in [1, 63], got " +
                          std::to_string(speed_factor));
    }
    if (median_window == 0) {
        throw ConfigError("median_window must be positive");
    }
    if (block_interval_s == 0) {
        throw ConfigError("block_interval_s must be positive");
    }
    if (minted > msupply) {
        throw ConfigError("minted exceeds msupply");
    }
    if (vaporized > minted) {
        throw ConfigError("vaporized exceeds minted");
    }
}

FireAmount base_reward(const EmissionState& st)
{
    // Both subtractions are safe under the standing invariants
    // vaporized <= minted <= msupply, enforced by mint()/vaporize().
    FireAmount circulating = st.minted - st.vaporized;
    FireAmount remaining = st.msupply - circulating;
    return remaining >> st.speed_factor;
}

void mint(EmissionState& st, FireAmount amount)
{
    // Compare against the remaining capacity rather than adding first:
    // msupply sits at the top of the 64-bit range, so the sum itself can
    // wrap, and a cap violation must always surface as an accounting error.
    if (amount > st.msupply - st.minted) {
        throw AccountingError("mint would exceed msupply: minted " +
                              std::to_string(st.minted) + " + " + std::to_string(amount));
    }
    st.minted += amount;
}

void vaporize(EmissionState& st, FireAmount amount)
{
    if (amount > st.circulating()) {
        throw AccountingError("vaporize exceeds circulating supply: " +
                              std::to_string(amount) + " > " +
                              std::to_string(st.circulating()));
    }
    st.vaporized += amount;  // vaporized + amount <= minted, cannot overflow
}

FireAmount penalized_reward(FireAmount base, std::uint64_t block_size, std::uint64_t median)
{
    if (median == 0) {
        throw StateError("penalized_reward: median must be positive");
    }
    if (median > 0xFFFFFFFFull) {
        // Keeps median * median exact in 64 bits below; no realistic block
        // size policy gets anywhere near this.
        throw OverflowError("penalized_reward: median exceeds 32 bits");
    }
    if (block_size <= median) {
        return base;
    }
    if (block_size > 2 * median) {
        throw StateError("block size " + std::to_string(block_size) +
                         " exceeds twice the median " + std::to_string(median));
    }
    // base * (1 - ((size - m) / m)^2) == base * size * (2m - size) / m^2.
    // size <= 2m <= 2^33, so size * (2m - size) <= m^2 < 2^64 and the full
    // numerator fits 128 bits; the quotient never exceeds base.
    std::uint64_t shrink = block_size * (2 * median - block_size);
    u128 numerator = u128(base) * shrink;
    return FireAmount(numerator / (u128(median) * median));
}

std::uint64_t rolling_median(std::span<const std::uint64_t> sizes, std::size_t window)
{
    if (sizes.empty()) {
        throw StateError("rolling_median: empty size history");
    }
    if (window == 0) {
        throw ConfigError("rolling_median: zero window");
    }
    std::size_t take = std::min(window, sizes.size());
    std::vector<std::uint64_t> tail(sizes.end() - take, sizes.end());
    std::sort(tail.begin(), tail.end());
    return tail[(take - 1) / 2];
}

void PremineSplit::validate() const
{
    std::uint64_t total = std::uint64_t(development) + developers_locked + foundation +
                          team + community + advisors;
    if (total != 1000) {
        throw ConfigError("premine split permille must sum to 1000, got " +
                          std::to_string(total));
    }
}

std::vector<PremineAllocation> genesis_premine(const PremineSplit& split,
                                               std::uint64_t premine_coins,
                                               FireAmount msupply)
{
    split.validate();
    if (premine_coins > msupply / COIN) {
        throw ConfigError("premine of " + std::to_string(premine_coins) +
                          " coins exceeds the money supply");
    }
    FireAmount total = premine_coins * COIN;

    const std::uint64_t weights[6] = {split.development, split.developers_locked,
                                      split.foundation,  split.team,
                                      split.community,   split.advisors};
    std::vector<FireAmount> amounts = allocate_largest_remainder(total, weights);

    return {
        {"development", amounts[0], false},
        {"developers_locked", amounts[1], true},
        {"foundation", amounts[2], false},
        {"team", amounts[3], false},
        {"community", amounts[4], false},
        {"advisors", amounts[5], false},
    };
}

std::vector<EmissionPoint> simulate_emission(const EmissionState& start, std::uint64_t blocks)
{
    EmissionState st = start;
    st.validate();
    if (blocks > 50'000'000) {
        throw ConfigError("emission horizon too large: " + std::to_string(blocks));
    }
    std::vector<EmissionPoint> series;
    series.reserve(std::size_t(blocks));
    for (std::uint64_t h = 1; h <= blocks; ++h) {
        FireAmount reward = base_reward(st);
        mint(st, reward);
        series.push_back({h, reward, st.minted});
    }
    return series;
}

}  // namespace fire::emission
