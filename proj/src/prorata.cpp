// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/prorata.h"

#include <algorithm>
#include <numeric>

#include "fire/errors.h"

namespace fire {

std::vector<FireAmount> allocate_largest_remainder(FireAmount total,
                                                   std::span<const std::uint64_t> weights)
{
    std::vector<FireAmount> shares(weights.size(), 0);
    u128 weight_sum = 0;
    for (std::uint64_t w : weights) {
        weight_sum += w;
    }
    if (weight_sum == 0) {
        return shares;  // nothing carries weight, nothing is distributed
    }

    std::vector<u128> remainders(weights.size(), 0);
    FireAmount assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        u128 product = u128(total) * weights[i];
        shares[i] = FireAmount(product / weight_sum);  // < total <= 2^64-1, fits
        remainders[i] = product % weight_sum;
        assigned += shares[i];  // sum of floors <= total, cannot overflow
    }

    // Hand out the leftover units to the largest remainders; a stable sort on
    // descending remainder keeps equal remainders in index order, which is the
    // lowest-id tie break the caller's ordering contract provides.
    FireAmount leftover = total - assigned;
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainders[a] > remainders[b];
    });
    for (std::size_t j = 0; j < leftover; ++j) {
        shares[order[j]] += 1;  // leftover < #nonzero-weight entries <= size
    }
    return shares;
}

std::vector<std::uint64_t> split_equal_rotating(std::uint64_t total, std::size_t n,
                                                std::uint64_t rotation)
{
    if (n == 0) {
        throw ConfigError("split_equal_rotating: no recipients");
    }
    std::uint64_t base = total / n;
    std::uint64_t extra = total % n;
    std::vector<std::uint64_t> parts(n, base);
    std::size_t start = std::size_t(rotation % n);
    for (std::uint64_t j = 0; j < extra; ++j) {
        parts[(start + j) % n] += 1;
    }
    return parts;
}

}  // namespace fire
