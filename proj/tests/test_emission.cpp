// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <cstdint>
#include <vector>

#include <doctest.h>

#include "fire/amount.h"
#include "fire/emission.h"
#include "fire/errors.h"

#include "oracles.h"

using namespace fire;
using namespace fire::emission;

TEST_CASE("state validation")
{
    EmissionState st;
    CHECK_NOTHROW(st.validate());
    st.speed_factor = 0;
    CHECK_THROWS_AS(st.validate(), ConfigError);
    st.speed_factor = 64;
    CHECK_THROWS_AS(st.validate(), ConfigError);
    st.speed_factor = 23;
    st.vaporized = 1;   // vaporized > minted
    CHECK_THROWS_AS(st.validate(), ConfigError);
}

TEST_CASE("base reward at genesis with no premine")
{
    EmissionState st;
    // floor((2^64 - 1) / 2^23) with nothing circulating.
    CHECK(base_reward(st) == 2'199'023'255'551ull);
}

TEST_CASE("first three blocks from an empty ledger")
{
    EmissionState st;
    std::vector<FireAmount> want_reward{2'199'023'255'551ull, 2'199'022'993'408ull,
                                        2'199'022'731'264ull};
    std::vector<FireAmount> want_minted{2'199'023'255'551ull, 4'398'046'248'959ull,
                                        6'597'068'980'223ull};
    for (int i = 0; i < 3; ++i) {
        FireAmount r = base_reward(st);
        CHECK(r == want_reward[i]);
        mint(st, r);
        CHECK(st.minted == want_minted[i]);
    }
}

TEST_CASE("vaporization feeds the reward pool back")
{
    EmissionState st;
    mint(st, 1'000'000 * COIN);
    FireAmount before = base_reward(st);
    vaporize(st, 400'000 * COIN);
    FireAmount after = base_reward(st);
    // Burning supply strictly raises the next reward (by the burned amount
    // divided by 2^23, floored).
    CHECK(after > before);
    CHECK(after - before == (400'000 * COIN) >> 23);
    CHECK(st.circulating() == 600'000 * COIN);

    CHECK_THROWS_AS(vaporize(st, st.circulating() + 1), AccountingError);
    CHECK_NOTHROW(vaporize(st, st.circulating()));
    CHECK(st.circulating() == 0);
    CHECK(base_reward(st) == 2'199'023'255'551ull);
}

TEST_CASE("mint refuses to pass the money supply cap")
{
    EmissionState st;
    st.minted = st.msupply - 10;
    CHECK_NOTHROW(mint(st, 10));
    CHECK(st.minted == st.msupply);
    CHECK(base_reward(st) == 0);
    CHECK_THROWS_AS(mint(st, 1), AccountingError);
}

TEST_CASE("short horizon matches the arbitrary-precision recurrence")
{
    EmissionState st;
    st.minted = 3'689'348'810'000'000'000ull;   // worked premine
    auto pts = simulate_emission(st, 5000);
    REQUIRE(pts.size() == 5000);
    oracles::cpp_int ref = st.minted;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        oracles::cpp_int reward = (oracles::cpp_int(st.msupply) - ref) >> st.speed_factor;
        ref += reward;
        CHECK(pts[i].height == i + 1);
        CHECK(oracles::cpp_int(pts[i].reward) == reward);
        CHECK(oracles::cpp_int(pts[i].minted) == ref);
    }
    // Frozen first rewards after the worked premine.
    CHECK(pts[0].reward == 1'759'218'605'006ull);
    CHECK(pts[1].reward == 1'759'218'395'291ull);
    CHECK(pts[2].reward == 1'759'218'185'576ull);
}

TEST_CASE("simulate_emission leaves the input state untouched")
{
    EmissionState st;
    auto pts = simulate_emission(st, 10);
    CHECK(st.minted == 0);
    CHECK(pts.back().minted > 0);
    CHECK_THROWS_AS(simulate_emission(st, 100'000'001ull), ConfigError);
}

TEST_CASE("penalized reward shape")
{
    const FireAmount base = 1000;
    const std::uint64_t m = 1000;
    SUBCASE("at or below the median the reward is untouched")
    {
        CHECK(penalized_reward(base, 1, m) == base);
        CHECK(penalized_reward(base, m / 2, m) == base);
        CHECK(penalized_reward(base, m, m) == base);
    }
    SUBCASE("the worked midpoint: 1.5x median keeps three quarters")
    {
        CHECK(penalized_reward(base, 1500, m) == 750);
    }
    SUBCASE("exactly 2x median earns zero, beyond is invalid")
    {
        CHECK(penalized_reward(base, 2 * m, m) == 0);
        CHECK_THROWS_AS(penalized_reward(base, 2 * m + 1, m), StateError);
    }
    SUBCASE("strictly decreasing across the penalty band")
    {
        FireAmount big = 2'199'023'255'551ull;
        FireAmount prev = penalized_reward(big, m, m);
        for (std::uint64_t s = m + 1; s <= 2 * m; ++s) {
            FireAmount cur = penalized_reward(big, s, m);
            CHECK(cur < prev);
            prev = cur;
        }
        CHECK(prev == 0);
    }
    SUBCASE("guards")
    {
        CHECK_THROWS_AS(penalized_reward(base, 10, 0), StateError);
        CHECK_THROWS_AS(penalized_reward(base, 10, 0x1'0000'0000ull), OverflowError);
        CHECK_NOTHROW(penalized_reward(base, 10, 0xFFFF'FFFFull));
    }
    SUBCASE("penalty factor is exact against a bignum model")
    {
        FireAmount big = 0x0123'4567'89AB'CDEFull;
        for (std::uint64_t s : {1001ull, 1250ull, 1333ull, 1777ull, 1999ull}) {
            oracles::cpp_int num = oracles::cpp_int(big) * s * (2 * m - s);
            oracles::cpp_int want = num / (oracles::cpp_int(m) * m);
            CHECK(oracles::cpp_int(penalized_reward(big, s, m)) == want);
        }
    }
}

TEST_CASE("rolling median")
{
    std::vector<std::uint64_t> sizes{3, 1, 2};
    CHECK(rolling_median(sizes, 3) == 2);
    CHECK(rolling_median(sizes, 100) == 2);   // window larger than history
    // Trailing window only: the 9s age out.
    std::vector<std::uint64_t> aging{9, 9, 1, 1};
    CHECK(rolling_median(aging, 2) == 1);
    CHECK(rolling_median(aging, 4) == 1);     // even count takes the lower middle
    std::vector<std::uint64_t> even{1, 2, 3, 4};
    CHECK(rolling_median(even, 4) == 2);
    std::vector<std::uint64_t> empty;
    CHECK_THROWS_AS(rolling_median(empty, 3), StateError);
    CHECK_THROWS_AS(rolling_median(sizes, 0), ConfigError);
}

TEST_CASE("premine split validation")
{
    PremineSplit split;
    CHECK_NOTHROW(split.validate());
    split.advisors = 31;
    CHECK_THROWS_AS(split.validate(), ConfigError);
}

TEST_CASE("genesis premine tranches")
{
    PremineSplit split;
    // 20% of the displayable supply, floored to whole coins.
    std::uint64_t coins = 368'934'881ull;
    auto alloc = genesis_premine(split, coins);
    REQUIRE(alloc.size() == 6);
    CHECK(alloc[0].account == "development");
    CHECK(alloc[1].account == "developers_locked");
    CHECK(alloc[2].account == "foundation");
    CHECK(alloc[3].account == "team");
    CHECK(alloc[4].account == "community");
    CHECK(alloc[5].account == "advisors");
    CHECK(alloc[0].amount == 2'213'609'286'000'000'000ull);
    CHECK(alloc[1].amount == 442'721'857'200'000'000ull);
    CHECK(alloc[2].amount == 368'934'881'000'000'000ull);
    CHECK(alloc[3].amount == 368'934'881'000'000'000ull);
    CHECK(alloc[4].amount == 184'467'440'500'000'000ull);
    CHECK(alloc[5].amount == 110'680'464'300'000'000ull);
    FireAmount total = 0;
    for (const auto& a : alloc) {
        total += a.amount;
        CHECK(a.locked == (a.account == "developers_locked"));
    }
    CHECK(total == 3'689'348'810'000'000'000ull);
    CHECK(total == coins * COIN);
}

TEST_CASE("genesis premine conserves odd totals exactly")
{
    PremineSplit split;
    // 7 coins cannot split evenly by permille; largest remainder must still
    // hand out every atomic unit.
    auto alloc = genesis_premine(split, 7);
    FireAmount total = 0;
    for (const auto& a : alloc) {
        total += a.amount;
    }
    CHECK(total == 7 * COIN);
    CHECK_THROWS_AS(genesis_premine(split, MAX_SUPPLY_COINS + 1), ConfigError);
    CHECK_NOTHROW(genesis_premine(split, MAX_SUPPLY_COINS));
}
