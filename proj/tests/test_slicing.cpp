#include "moranslice/slicing.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace moran;

namespace {

Rational sample_intercept(std::mt19937_64& rng, const Slope& slope) {
    const std::uint64_t den = 11 + rng() % 9973;
    const std::uint64_t num = 1 + rng() % (den - 1);
    return slope.j_lo() + Rational(BigInt(num), BigInt(den)) * (1 - slope.j_lo());
}

}  // namespace

TEST_CASE("slope validation") {
    CHECK_NOTHROW(Slope(0, 1));
    CHECK_NOTHROW(Slope(3, 2));
    CHECK_THROWS_WITH_AS(Slope(2, 4), "slope not in lowest terms", std::invalid_argument);
    CHECK_THROWS_AS(Slope(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Slope(-1, 2), std::invalid_argument);
    const Slope s(1, 2);
    CHECK(s.order() == 3);
    CHECK(s.j_lo() == Rational(-1, 2));
}

TEST_CASE("interval maps") {
    const Slope diag(1, 1);
    CHECK(interval_map_forward(0, {0, 0}, Rational(1, 2), diag) == Rational(3, 2));
    CHECK(interval_map_forward(0, {2, 0}, Rational(-1, 2), diag) == Rational(1, 2));
    CHECK(interval_map_forward(1, {3, 3}, 0, diag) == 0);

    CHECK(interval_map_inverse(0, {0, 0}, Rational(3, 2), diag) == Rational(1, 2));
    CHECK(interval_map_inverse(0, {1, 0}, 1, diag) == 0);
    CHECK(interval_map_inverse(1, {0, 3}, -1, diag) == Rational(1, 2));

    CHECK_THROWS_AS(interval_map_forward(0, {1, 1}, 0, diag), InvalidDigit);
    CHECK_THROWS_AS(interval_map_inverse(1, {2, 2}, 0, diag), InvalidDigit);
}

TEST_CASE("inverse law on random inputs") {
    std::mt19937_64 rng(11);
    const Slope slope(2, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const int tag = static_cast<int>(rng() % 2);
        const auto& set = digit_set(tag);
        const Digit d = set[rng() % set.size()];
        const Rational x(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
        CHECK(interval_map_inverse(tag, d, interval_map_forward(tag, d, x, slope), slope) == x);
    }
}

TEST_CASE("backward images cover J") {
    for (const Slope& slope : {Slope(0, 1), Slope(1, 1), Slope(1, 2), Slope(3, 2)}) {
        for (int tag : {0, 1}) {
            std::vector<std::pair<Rational, Rational>> imgs;
            for (const Digit& d : digit_set(tag))
                imgs.emplace_back(interval_map_inverse(tag, d, slope.j_lo(), slope),
                                  interval_map_inverse(tag, d, 1, slope));
            std::sort(imgs.begin(), imgs.end());
            Rational covered = slope.j_lo();
            for (const auto& [lo, hi] : imgs) {
                if (lo <= covered) covered = std::max(covered, hi);
            }
            CHECK(covered == 1);
        }
    }
}

TEST_CASE("greedy expansion examples") {
    const MoranSequence zeros = MoranSequence::parse("(0)");
    const Slope diag(1, 1);

    SUBCASE("left endpoint is all zeros") {
        const auto exp = greedy_expand(Rational(-1), zeros, diag, 5);
        CHECK(exp.k == 1);
        CHECK(exp.digits == std::vector<int>{0, 0, 0, 0, 0});
        CHECK(exp.boundary);  // terminating expansion
    }
    SUBCASE("base-3 digits of 1/2") {
        const auto exp = greedy_expand(Rational(1, 2), zeros, diag, 4);
        CHECK(exp.k == 2);
        CHECK(exp.digits == std::vector<int>{1, 1, 1, 1});
        CHECK(!exp.boundary);
    }
    SUBCASE("sigma-adapted alphabet, terminating case") {
        const MoranSequence oneZero = MoranSequence::parse("(10)");
        const auto exp = greedy_expand(Rational(1, 4), oneZero, diag, 2);
        CHECK(exp.k == 2);
        CHECK(exp.digits == std::vector<int>{1, 0});
        CHECK(exp.boundary);
    }
    SUBCASE("right endpoint convention") {
        const auto exp = greedy_expand(Rational(1), zeros, diag, 3);
        CHECK(exp.k == 2);
        CHECK(exp.boundary);
    }
    CHECK_THROWS_AS(greedy_expand(Rational(-2), zeros, diag, 3), OutOfRange);
    CHECK_THROWS_AS(greedy_expand(Rational(3, 2), zeros, diag, 3), OutOfRange);
}

TEST_CASE("digits respect the sigma-adapted alphabet") {
    const MoranSequence sigma = MoranSequence::parse("1(01)");
    const Slope slope(2, 3);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = sample_intercept(rng, slope);
        const auto exp = greedy_expand(a, sigma, slope, 9);
        for (std::size_t i = 0; i < exp.digits.size(); ++i) {
            const int base = level_base(sigma.at(i + 1));
            CHECK(exp.digits[i] >= 0);
            CHECK(exp.digits[i] < base);
        }
    }
}

TEST_CASE("expansion value examples") {
    const Slope diag(1, 1);
    const MoranSequence zeros = MoranSequence::parse("(0)");
    CHECK(expansion_value({1, {0, 0, 0}, false}, zeros, diag) == Rational(-1));
    CHECK(expansion_value({2, {1, 1}, false}, zeros, diag) == Rational(4, 9));
    const MoranSequence oneZero = MoranSequence::parse("(10)");
    CHECK(expansion_value({2, {1, 0}, false}, oneZero, diag) == Rational(1, 4));
    CHECK_THROWS_AS(expansion_value({1, {3}, false}, zeros, diag), InvalidDigit);
}

TEST_CASE("greedy round trip bound") {
    std::mt19937_64 rng(5);
    const int depth = 10;
    for (const Slope& slope : {Slope(0, 1), Slope(1, 1), Slope(1, 2), Slope(2, 3)}) {
        for (const char* spec : {"(0)", "(1)", "(01)", "11(0)"}) {
            const MoranSequence sigma = MoranSequence::parse(spec);
            for (int trial = 0; trial < 25; ++trial) {
                const Rational a = sample_intercept(rng, slope);
                const auto exp = greedy_expand(a, sigma, slope, depth);
                const Rational back = expansion_value(exp, sigma, slope);
                CHECK(back <= a);  // greedy never overshoots
                const Rational err = a - back;
                CHECK(err <= Rational(BigInt(1), slope.N() * side_denominator(sigma, depth)));
            }
        }
    }
}

TEST_CASE("gamma lattice examples") {
    const Slope diag(1, 1);
    const auto g1 = gamma_lattice(Rational(1, 2), diag);
    CHECK(g1.points == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
    CHECK(g1.i0 == 2);

    const auto g2 = gamma_lattice(Rational(-1, 4), diag);
    CHECK(g2.points == std::vector<Rational>{Rational(-1, 4), Rational(3, 4)});
    CHECK(g2.i0 == 1);

    const Slope half(1, 2);
    const auto g3 = gamma_lattice(Rational(1, 4), half);
    CHECK(g3.points ==
          std::vector<Rational>{Rational(-1, 4), Rational(1, 4), Rational(3, 4)});
    CHECK(g3.i0 == 2);

    CHECK_THROWS_AS(gamma_lattice(Rational(2), diag), OutOfRange);
}

TEST_CASE("lattice size, rank and interval membership") {
    std::mt19937_64 rng(31);
    for (const Slope& slope : {Slope(0, 1), Slope(1, 1), Slope(1, 2), Slope(3, 2), Slope(2, 3)}) {
        const MoranSequence sigma = MoranSequence::parse("(01)");
        for (int trial = 0; trial < 40; ++trial) {
            const Rational a = sample_intercept(rng, slope);
            const auto g = gamma_lattice(a, slope);
            CHECK(static_cast<int>(g.points.size()) == slope.order());
            CHECK(std::is_sorted(g.points.begin(), g.points.end()));
            CHECK(g.points[static_cast<std::size_t>(g.i0 - 1)] == a);
            for (int i = 1; i <= slope.order(); ++i) {
                CHECK(g.points[static_cast<std::size_t>(i - 1)] >= slope.interval_lo(i));
                CHECK(g.points[static_cast<std::size_t>(i - 1)] <= slope.interval_hi(i));
            }
            // The rank of a agrees with the greedy containing index.
            CHECK(g.i0 == greedy_expand(a, sigma, slope, 0).k);
        }
    }
}

TEST_CASE("lattice shift invariance") {
    std::mt19937_64 rng(37);
    const Slope slope(2, 3);
    for (int trial = 0; trial < 40; ++trial) {
        Rational a = sample_intercept(rng, slope);
        const Rational shifted = a + Rational(1, slope.N());
        if (shifted > 1) continue;
        CHECK(gamma_lattice(a, slope).points == gamma_lattice(shifted, slope).points);
    }
}

TEST_CASE("line-cell intersection") {
    const Slope diag(1, 1);
    const Rect unit{0, 1, 0, 1};
    CHECK(line_cell_intersects(unit, diag, 0));
    CHECK(line_cell_intersects(unit, diag, 1));  // corner touch
    const Rect corner{0, Rational(1, 3), 0, Rational(1, 3)};
    CHECK(!line_cell_intersects(corner, diag, Rational(1, 2)));
    CHECK(line_cell_intersects(corner, diag, Rational(1, 3)));  // touching counts
}

TEST_CASE("count oracle examples") {
    const MoranSequence zeros = MoranSequence::parse("(0)");
    const Slope diag(1, 1);
    CHECK(count_oracle(Rational(1, 2), zeros, diag, 0) == 1);
    CHECK(count_oracle(Rational(1, 2), zeros, diag, 1) == 3);
    CHECK(count_oracle(Rational(1, 2), zeros, diag, 2) == 9);
    CHECK_THROWS_AS(count_oracle(Rational(5), zeros, diag, 1), OutOfRange);
    CHECK_THROWS_AS(count_oracle(Rational(1, 2), zeros, diag, 8, 10), BudgetExceeded);
}

TEST_CASE("geometric and interval-map oracles agree") {
    std::mt19937_64 rng(41);
    for (const Slope& slope : {Slope(0, 1), Slope(1, 1), Slope(1, 2), Slope(3, 2)}) {
        for (const char* spec : {"(0)", "(1)", "(01)"}) {
            const MoranSequence sigma = MoranSequence::parse(spec);
            for (int trial = 0; trial < 8; ++trial) {
                const Rational a = sample_intercept(rng, slope);
                for (int n = 0; n <= 4; ++n)
                    CHECK(count_oracle(a, sigma, slope, n) ==
                          count_oracle_interval(a, sigma, slope, n));
            }
        }
    }
}

TEST_CASE("count growth bound") {
    std::mt19937_64 rng(43);
    const Slope slope(1, 2);
    const MoranSequence sigma = MoranSequence::parse("(10)");
    for (int trial = 0; trial < 10; ++trial) {
        const Rational a = sample_intercept(rng, slope);
        std::uint64_t prev = count_oracle(a, sigma, slope, 0);
        for (int n = 1; n <= 5; ++n) {
            const std::uint64_t cur = count_oracle(a, sigma, slope, n);
            CHECK(cur <= 12 * prev);
            prev = cur;
        }
    }
}
