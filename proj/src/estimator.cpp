#include "moranslice/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace moran {

DimensionEstimate box_dim_sequence(const Rational& a, const MoranSequence& sigma,
                                   const Slope& slope, int max_depth, CountMethod method,
                                   std::uint64_t cell_budget) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be positive");
    DimensionEstimate out;
    for (int k = 1; k <= max_depth; ++k) {
        BigInt count;
        bool boundary = false;
        if (method == CountMethod::Matrix || method == CountMethod::Both) {
            const MatrixCount mc = matrix_count(a, sigma, slope, k);
            count = mc.value;
            boundary = mc.boundary;
        }
        if (method == CountMethod::Oracle || method == CountMethod::Both) {
            const BigInt oracle = count_oracle(a, sigma, slope, k, cell_budget);
            if (method == CountMethod::Both) {
                if (!boundary && oracle != count)
                    throw VerificationFailure(k, count.str(), oracle.str());
            } else {
                count = oracle;
            }
        }
        out.boundary = out.boundary || boundary;
        out.depths.push_back(k);
        out.counts.push_back(count);
        const auto [n0, n1] = sigma.counts(k);
        const double scale = n0 * std::log(3.0) + n1 * std::log(4.0);
        out.estimates.push_back(count > 0 ? log_big(count) / scale : 0.0);
    }
    return out;
}

std::pair<double, double> tail_bounds(const DimensionEstimate& est, int window) {
    if (window < 1) throw std::invalid_argument("window must be positive");
    if (static_cast<std::size_t>(window) > est.estimates.size())
        throw WindowTooLarge("window exceeds number of computed depths");
    const auto first = est.estimates.end() - window;
    const auto [lo, hi] = std::minmax_element(first, est.estimates.end());
    return {*lo, *hi};
}

namespace {

// Seeded intercept sampler. mt19937_64 with explicit reduction keeps the
// stream identical across platforms.
class InterceptSampler {
public:
    explicit InterceptSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next(const Slope& slope) {
        const std::uint64_t den = 101 + rng_() % 899'899;  // 101 .. 999999
        const std::uint64_t num = 1 + rng_() % (den - 1);
        // t in (0,1) mapped onto J = [-M/N, 1].
        const Rational t{BigInt(num), BigInt(den)};
        return slope.j_lo() + t * (1 - slope.j_lo());
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace

VerificationReport verify_lemma33(const VerificationSuite& suite) {
    VerificationReport report;
    InterceptSampler sampler(suite.seed);
    for (const SlopeSpec& ss : suite.slopes) {
        const Slope slope(ss.M, ss.N);
        for (const std::string& sig_spec : suite.sigma_specs) {
            const MoranSequence sigma = MoranSequence::parse(sig_spec);
            std::vector<Rational> intercepts = suite.explicit_intercepts;
            int sampled = 0;
            int attempts = 0;
            while (sampled < suite.samples_per_case && attempts < suite.samples_per_case * 50) {
                ++attempts;
                const Rational a = sampler.next(slope);
                if (greedy_expand(a, sigma, slope, suite.depth_cap).boundary) continue;
                intercepts.push_back(a);
                ++sampled;
            }
            for (const Rational& a : intercepts) {
                VerificationRecord rec;
                rec.slope = ss;
                rec.sigma = sig_spec;
                rec.intercept = a;
                rec.boundary = greedy_expand(a, sigma, slope, suite.depth_cap).boundary;
                if (rec.boundary) {
                    ++report.skipped_boundary;
                } else {
                    for (int k = 1; k <= suite.depth_cap; ++k) {
                        const BigInt matrix = matrix_count(a, sigma, slope, k).value;
                        const BigInt oracle =
                            count_oracle(a, sigma, slope, k, suite.cell_budget);
                        if (matrix != oracle) {
                            rec.mismatch_depth = k;
                            rec.matrix_value = matrix.str();
                            rec.oracle_value = oracle.str();
                            ++report.mismatches;
                            break;
                        }
                    }
                    ++report.total_checked;
                }
                report.records.push_back(std::move(rec));
            }
        }
    }
    return report;
}

}  // namespace moran
