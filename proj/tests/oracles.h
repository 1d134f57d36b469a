// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
//
// Independent reference implementations used only by tests. They favor
// clarity and bignum safety over speed so disagreements with the production
// code point at the production code.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracles {

using boost::multiprecision::cpp_int;

// Emission recurrence in arbitrary precision: A' = A + ((M - A) >> speed).
inline cpp_int minted_after(const cpp_int& msupply, const cpp_int& start_minted,
                            unsigned speed_factor, std::uint64_t blocks)
{
    cpp_int minted = start_minted;
    for (std::uint64_t i = 0; i < blocks; ++i) {
        minted += (msupply - minted) >> speed_factor;
    }
    return minted;
}

// Direct recursive reading of the equal-share redistribution rule: take the
// unfilled set, compute the integer average, fully fund everything at or
// below it, recurse on the rest with the money that is left; if nobody fills,
// everyone left takes exactly the average.
inline std::vector<std::uint64_t> distribute_reference(
    const std::vector<std::uint64_t>& deficits, std::uint64_t pool)
{
    std::vector<std::uint64_t> out(deficits.size(), 0);
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < deficits.size(); ++i) {
        if (deficits[i] > 0) {
            live.push_back(i);
        }
    }
    std::function<void(std::vector<std::size_t>, std::uint64_t)> go =
        [&](std::vector<std::size_t> idx, std::uint64_t p) {
            if (idx.empty()) {
                return;
            }
            std::uint64_t avg = p / idx.size();
            std::vector<std::size_t> rest;
            std::uint64_t spent = 0;
            for (std::size_t i : idx) {
                if (deficits[i] <= avg) {
                    out[i] = deficits[i];
                    spent += deficits[i];
                } else {
                    rest.push_back(i);
                }
            }
            if (rest.size() == idx.size()) {
                for (std::size_t i : idx) {
                    out[i] = avg;
                }
                return;
            }
            go(std::move(rest), p - spent);
        };
    go(std::move(live), pool);
    return out;
}

// Exhaustive apportionment reference. The floor shares are forced; the
// leftover units are assigned by trying every subset of recipients of the
// right size and scoring the exact L1 distance to the ideal fractional
// shares (in units of 1/W). Ties prefer the lexicographically smallest index
// subset, which is exactly "largest remainder, ties to the lowest index".
// Only suitable for small n.
inline std::vector<std::uint64_t> apportion_reference(std::uint64_t total,
                                                      const std::vector<std::uint64_t>& weights)
{
    std::size_t n = weights.size();
    cpp_int W = 0;
    for (std::uint64_t w : weights) {
        W += w;
    }
    std::vector<std::uint64_t> shares(n, 0);
    if (W == 0) {
        return shares;
    }
    std::vector<cpp_int> rem(n);
    cpp_int assigned = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cpp_int product = cpp_int(total) * weights[i];
        cpp_int f = product / W;
        shares[i] = f.convert_to<std::uint64_t>();
        rem[i] = product % W;
        assigned += f;
    }
    std::uint64_t leftover = (cpp_int(total) - assigned).convert_to<std::uint64_t>();
    if (leftover == 0) {
        return shares;
    }

    cpp_int best_cost = -1;
    std::vector<std::size_t> best_pick;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> search = [&](std::size_t from) {
        if (pick.size() == leftover) {
            cpp_int cost = 0;
            std::size_t k = 0;
            for (std::size_t i = 0; i < n; ++i) {
                bool chosen = k < pick.size() && pick[k] == i;
                if (chosen) {
                    cost += W - rem[i];
                    ++k;
                } else {
                    cost += rem[i];
                }
            }
            if (best_cost < 0 || cost < best_cost ||
                (cost == best_cost && pick < best_pick)) {
                best_cost = cost;
                best_pick = pick;
            }
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            pick.push_back(i);
            search(i + 1);
            pick.pop_back();
        }
    };
    search(0);
    for (std::size_t i : best_pick) {
        shares[i] += 1;
    }
    return shares;
}

}  // namespace oracles
