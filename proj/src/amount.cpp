// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/amount.h"

#include <algorithm>

namespace fire {

FireAmount checked_add(FireAmount a, FireAmount b)
{
    FireAmount sum = a + b;
    if (sum < a) {
        throw OverflowError("amount addition overflows 64 bits: " + std::to_string(a) +
                            " + " + std::to_string(b));
    }
    return sum;
}

FireAmount checked_sub(FireAmount a, FireAmount b)
{
    if (b > a) {
        throw AccountingError("amount subtraction underflows: " + std::to_string(a) +
                              " - " + std::to_string(b));
    }
    return a - b;
}

FireAmount mul_div_floor(FireAmount value, std::uint64_t num, std::uint64_t den)
{
    if (den == 0) {
        throw ConfigError("mul_div_floor: zero denominator");
    }
    u128 q = (u128(value) * num) / den;
    if (q > u128(MAX_SUPPLY)) {
        throw OverflowError("mul_div_floor: quotient exceeds 64 bits");
    }
    return FireAmount(q);
}

FireAmount to_display_coins(FireAmount atomic)
{
    return atomic / COIN;
}

std::string u128_to_string(u128 v)
{
    if (v == 0) {
        return "0";
    }
    std::string out;
    while (v > 0) {
        out.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace fire
