#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "moranslice/transfer.hpp"

namespace moran {

inline constexpr std::uint64_t kDefaultWordBudget = 20'000'000;

// Finite-depth pressure at one q:
//   raw        = (1/k) log sum_{x in Sigma^k} ||A_x||^q
//   normalized = raw * k / (n0(k) log3 + n1(k) log4)
// The norm is the entry sum of the full product; products are exact
// integers, only the exponentiation is floating point.
struct PressurePoint {
    double q = 0;
    int k = 0;
    double raw = 0;
    double normalized = 0;
};

// q = 0 and q = 1 take closed-form fast paths (word counting and the
// factored sum of matrices); other q enumerate the word tree with shared
// prefix products. Throws BudgetExceeded when 3^{n0(k)} 4^{n1(k)} exceeds
// word_budget on the enumeration path.
PressurePoint pressure_estimate(double q, const MoranSequence& sigma, const Slope& slope,
                                int k, std::uint64_t word_budget = kDefaultWordBudget);

// Enumeration forced even at q = 0 or 1; used to test the fast paths.
PressurePoint pressure_estimate_enumerated(double q, const MoranSequence& sigma,
                                           const Slope& slope, int k,
                                           std::uint64_t word_budget = kDefaultWordBudget);

// Exact sum_{x in Sigma^k} ||A_x||, two routes: word enumeration and the
// identity sum_x A_x = prod_i (sum_j A_{sigma_i}^j).
BigInt pressure_q1_sum_enumerated(const MoranSequence& sigma, const Slope& slope, int k,
                                  std::uint64_t word_budget = kDefaultWordBudget);
BigInt pressure_q1_sum_factored(const MoranSequence& sigma, const Slope& slope, int k);

// log ||A_x|| for every word of length k, in lexicographic word order.
std::vector<double> word_log_norms(const MoranSequence& sigma, const Slope& slope, int k,
                                   std::uint64_t word_budget = kDefaultWordBudget);

// (1/k) log ||A_{x_1} ... A_{x_k}|| for one symbol prefix.
double lyapunov_estimate(std::span<const int> symbols, const MoranSequence& sigma,
                         const Slope& slope, int k);

// mu_q of the cylinder [word]: ||A_word||^q normalized over all words of
// the same length.
double cylinder_measure(std::span<const int> word, double q, const MoranSequence& sigma,
                        const Slope& slope, std::uint64_t word_budget = kDefaultWordBudget);

struct SpectrumBound {
    double alpha = 0;
    double bound = 0;
    double minimizing_q = 0;
};

// min over the grid of -q*alpha + normalized pressure at depth k.
SpectrumBound spectrum_upper_bound(double alpha, const MoranSequence& sigma,
                                   const Slope& slope, int k, std::span<const double> q_grid,
                                   std::uint64_t word_budget = kDefaultWordBudget);

struct Witness {
    double q = 0;
    double margin = 0;  // normalized pressure minus the chord (s-1)q + 1
};

// Grid point (if any) where the normalized pressure drops strictly below
// the chord (s-1)q + 1, s = carpet dimension; returns the most negative
// margin.
std::optional<Witness> theorem3_witness(const MoranSequence& sigma, const Slope& slope,
                                        int k, std::span<const double> q_grid,
                                        std::uint64_t word_budget = kDefaultWordBudget);

}  // namespace moran
