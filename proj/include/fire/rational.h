// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <string>

#include "fire/amount.h"
#include "fire/errors.h"

namespace fire {

// Exact non-negative rational, used wherever the protocol compares fractions:
// quorum thresholds, the surplus sufficiency coefficient, relative backer
// contributions. Comparisons cross-multiply through 128 bits, so they are
// exact for any num/den that fit in 64 bits; no value is ever rounded here.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d);

    // Reduced by gcd on construction, so equal values compare equal with ==.
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string str() const;
};

// a/b vs c/d by cross multiplication. Both sides must have nonzero
// denominators (enforced at construction).
bool rational_less(const Rational& a, const Rational& b);
bool rational_less_equal(const Rational& a, const Rational& b);

// ceil(count * r) for threshold arithmetic (quorums, election bars).
std::uint64_t ceil_fraction(std::uint64_t count, const Rational& r);

}  // namespace fire
