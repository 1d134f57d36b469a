// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/rational.h"

#include <numeric>

namespace fire {

Rational::Rational(std::uint64_t n, std::uint64_t d)
{
    if (d == 0) {
        throw ConfigError("rational with zero denominator");
    }
    // d > 0 here, so gcd(n, d) >= 1 even when n == 0.
    std::uint64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::str() const
{
    return std::to_string(num) + "/" + std::to_string(den);
}

bool rational_less(const Rational& a, const Rational& b)
{
    return u128(a.num) * b.den < u128(b.num) * a.den;
}

bool rational_less_equal(const Rational& a, const Rational& b)
{
    return u128(a.num) * b.den <= u128(b.num) * a.den;
}

std::uint64_t ceil_fraction(std::uint64_t count, const Rational& r)
{
    u128 scaled = u128(count) * r.num;
    u128 q = (scaled + r.den - 1) / r.den;
    if (q > u128(MAX_SUPPLY)) {
        throw OverflowError("ceil_fraction exceeds 64 bits");
    }
    return std::uint64_t(q);
}

}  // namespace fire
