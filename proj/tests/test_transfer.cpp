#include "moranslice/transfer.hpp"

#include <numeric>
#include <random>

#include "doctest.h"

using namespace moran;

namespace {

TransferMatrix from_rows(int tag, int j, std::vector<std::vector<int>> rows) {
    TransferMatrix m;
    m.order = static_cast<int>(rows.size());
    m.level_tag = tag;
    m.label = j;
    for (const auto& row : rows) m.entries.insert(m.entries.end(), row.begin(), row.end());
    return m;
}

}  // namespace

TEST_CASE("semantic builder, diagonal slope") {
    const Slope diag(1, 1);
    CHECK(build_matrix_semantic(0, 0, diag) == from_rows(0, 0, {{1, 0}, {2, 2}}));
    CHECK(build_matrix_semantic(0, 1, diag) == from_rows(0, 1, {{2, 1}, {1, 2}}));
    CHECK(build_matrix_semantic(0, 2, diag) == from_rows(0, 2, {{2, 2}, {0, 1}}));
    CHECK_THROWS_AS(build_matrix_semantic(0, 3, diag), InvalidLabel);
    CHECK_THROWS_AS(build_matrix_semantic(1, 4, diag), InvalidLabel);
    CHECK_THROWS_AS(build_matrix_semantic(2, 0, diag), InvalidLabel);
}

TEST_CASE("semantic builder, horizontal slope") {
    const Slope flat(0, 1);
    CHECK(build_matrix_semantic(0, 0, flat) == from_rows(0, 0, {{3}}));
    CHECK(build_matrix_semantic(0, 1, flat) == from_rows(0, 1, {{2}}));
    CHECK(build_matrix_semantic(0, 2, flat) == from_rows(0, 2, {{3}}));
    // Tag 1 rows of the base-4 grid hold 4, 3, 2, 3 digits.
    CHECK(build_matrix_semantic(1, 0, flat) == from_rows(1, 0, {{4}}));
    CHECK(build_matrix_semantic(1, 1, flat) == from_rows(1, 1, {{3}}));
    CHECK(build_matrix_semantic(1, 2, flat) == from_rows(1, 2, {{2}}));
    CHECK(build_matrix_semantic(1, 3, flat) == from_rows(1, 3, {{3}}));
}

TEST_CASE("closed form equals semantic across small slopes") {
    for (long N = 1; N <= 8; ++N) {
        for (long M = 0; M + N <= 9; ++M) {
            if (std::gcd(M, N) != 1) continue;
            const Slope slope(M, N);
            for (int tag : {0, 1})
                for (int j = 0; j < label_count(tag); ++j)
                    CHECK(build_matrix_closed_form(tag, j, slope) ==
                          build_matrix_semantic(tag, j, slope));
        }
    }
}

TEST_CASE("entry bounds") {
    for (const Slope& slope : {Slope(1, 1), Slope(1, 2), Slope(3, 2), Slope(0, 1)}) {
        for (int tag : {0, 1}) {
            const long digits = static_cast<long>(digit_set(tag).size());
            for (const TransferMatrix& m : build_family(tag, slope)) {
                for (int p = 0; p < m.order; ++p) {
                    long row = 0;
                    for (int q = 0; q < m.order; ++q) {
                        CHECK(m.at(p, q) >= 0);
                        CHECK(m.at(p, q) <= digits);
                        row += m.at(p, q);
                    }
                    CHECK(row <= digits);
                }
            }
        }
    }
}

TEST_CASE("product norm") {
    const Slope diag(1, 1);
    const auto family = build_family(0, diag);
    CHECK(product_norm({}, 1) == 1);
    CHECK(product_norm(std::span(&family[1], 1), 1) == 3);
    const TransferMatrix two[] = {family[0], family[2]};
    CHECK(product_norm(two, 2) == 10);

    CHECK_THROWS_AS(product_norm(std::span(&family[0], 1), 0), OrderMismatch);
    CHECK_THROWS_AS(product_norm(std::span(&family[0], 1), 3), OrderMismatch);
    const TransferMatrix mixed[] = {family[0], build_matrix_semantic(0, 0, Slope(1, 2))};
    CHECK_THROWS_AS(product_norm(mixed, 1), OrderMismatch);
}

TEST_CASE("norm submultiplicativity") {
    std::mt19937_64 rng(17);
    const Slope slope(2, 3);
    std::vector<TransferMatrix> pool;
    for (int tag : {0, 1})
        for (const auto& m : build_family(tag, slope)) pool.push_back(m);
    auto full_norm = [](const TransferMatrix& a, const TransferMatrix& b) {
        BigInt total = 0;
        for (int p = 0; p < a.order; ++p)
            for (int q = 0; q < a.order; ++q)
                for (int r = 0; r < a.order; ++r) total += BigInt(a.at(p, r)) * b.at(r, q);
        return total;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const TransferMatrix& a = pool[rng() % pool.size()];
        const TransferMatrix& b = pool[rng() % pool.size()];
        CHECK(full_norm(a, b) <= BigInt(matrix_norm(a)) * matrix_norm(b));
    }
}

TEST_CASE("matrix count examples") {
    const MoranSequence zeros = MoranSequence::parse("(0)");
    const Slope diag(1, 1);
    CHECK(matrix_count(Rational(1, 4), zeros, diag, 0).value == 1);
    CHECK(matrix_count(Rational(1, 2), zeros, diag, 1).value == 3);
    CHECK(matrix_count(Rational(1, 2), zeros, diag, 2).value == 9);
    CHECK(!matrix_count(Rational(1, 2), zeros, diag, 2).boundary);
    CHECK(matrix_count(Rational(1, 4), MoranSequence::parse("(10)"), diag, 2).boundary);
    CHECK_THROWS_AS(matrix_count(Rational(2), zeros, diag, 1), OutOfRange);
}

TEST_CASE("row sums match depth-1 oracle on subinterval midpoints") {
    for (const Slope& slope : {Slope(1, 1), Slope(1, 2), Slope(2, 3)}) {
        const long N = slope.N();
        for (int tag : {0, 1}) {
            const int base = level_base(tag);
            const MoranSequence sigma = MoranSequence::parse(tag == 0 ? "(0)" : "(1)");
            for (int j = 0; j < base; ++j) {
                const TransferMatrix m = build_matrix_semantic(tag, j, slope);
                for (int p = 1; p <= slope.order(); ++p) {
                    const Rational mid =
                        slope.interval_lo(p) + Rational(2 * j + 1, 2L * base * N);
                    long row = 0;
                    for (int q = 0; q < m.order; ++q) row += m.at(p - 1, q);
                    CHECK(static_cast<std::uint64_t>(row) ==
                          count_oracle(mid, sigma, slope, 1));
                }
            }
        }
    }
}

TEST_CASE("family norm totals match subinterval enumeration") {
    const Slope diag(1, 1);
    long total = 0;
    for (const auto& m : build_family(0, diag)) total += matrix_norm(m);
    CHECK(total == 16);

    // Same consistency on another slope, against the oracle route.
    const Slope half(1, 2);
    const MoranSequence zeros = MoranSequence::parse("(0)");
    long family_total = 0;
    for (const auto& m : build_family(0, half)) family_total += matrix_norm(m);
    std::uint64_t oracle_total = 0;
    for (int p = 1; p <= half.order(); ++p)
        for (int j = 0; j < 3; ++j)
            oracle_total += count_oracle(
                half.interval_lo(p) + Rational(2 * j + 1, 6L * half.N()), zeros, half, 1);
    CHECK(static_cast<std::uint64_t>(family_total) == oracle_total);
}

TEST_CASE("matrix count equals oracle on random intercepts") {
    std::mt19937_64 rng(19);
    for (const Slope& slope : {Slope(1, 1), Slope(1, 2), Slope(3, 2)}) {
        for (const char* spec : {"(0)", "(1)", "(01)"}) {
            const MoranSequence sigma = MoranSequence::parse(spec);
            int done = 0;
            while (done < 10) {
                const std::uint64_t den = 11 + rng() % 9973;
                const std::uint64_t num = 1 + rng() % (den - 1);
                const Rational a =
                    slope.j_lo() + Rational(BigInt(num), BigInt(den)) * (1 - slope.j_lo());
                const MatrixCount mc = matrix_count(a, sigma, slope, 5);
                if (mc.boundary) continue;
                CHECK(mc.value == count_oracle(a, sigma, slope, 5));
                ++done;
            }
        }
    }
}
