#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moranslice/transfer.hpp"

namespace moran {

enum class CountMethod { Matrix, Oracle, Both };

// Finite-depth box-dimension data for one intercept: exact counts and
// the ratios log N_k / (n0(k) log3 + n1(k) log4).
struct DimensionEstimate {
    std::vector<int> depths;
    std::vector<BigInt> counts;
    std::vector<double> estimates;
    bool boundary = false;
};

// Counts at depths 1..max_depth. With CountMethod::Both the matrix and
// oracle counts are compared at every depth and a mismatch on a
// non-boundary intercept throws VerificationFailure.
DimensionEstimate box_dim_sequence(const Rational& a, const MoranSequence& sigma,
                                   const Slope& slope, int max_depth,
                                   CountMethod method,
                                   std::uint64_t cell_budget = 10'000'000);

// (min, max) of the estimates over the trailing `window` depths: finite
// proxies for liminf/limsup. Throws WindowTooLarge.
std::pair<double, double> tail_bounds(const DimensionEstimate& est, int window);

struct SlopeSpec {
    long M = 0;
    long N = 1;
};

struct VerificationSuite {
    std::vector<SlopeSpec> slopes;
    std::vector<std::string> sigma_specs;
    std::vector<Rational> explicit_intercepts;  // checked for every case
    int samples_per_case = 25;
    int depth_cap = 7;
    std::uint64_t seed = 1;
    std::uint64_t cell_budget = 10'000'000;
};

struct VerificationRecord {
    SlopeSpec slope;
    std::string sigma;
    Rational intercept;
    bool boundary = false;           // skipped from the equality check
    std::optional<int> mismatch_depth;
    std::string matrix_value;        // at the mismatching depth
    std::string oracle_value;
};

struct VerificationReport {
    std::vector<VerificationRecord> records;
    long total_checked = 0;
    long skipped_boundary = 0;
    long mismatches = 0;

    bool passed() const { return mismatches == 0; }
};

// Samples seeded random non-boundary rational intercepts for every
// (slope, sigma) pair and checks matrix_count == count_oracle at every
// depth up to the cap. Deterministic for a fixed seed.
VerificationReport verify_lemma33(const VerificationSuite& suite);

}  // namespace moran
