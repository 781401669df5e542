#include "moranslice/multifractal.hpp"

#include <cmath>
#include <limits>

#include "moranslice/errors.hpp"

namespace moran {

namespace {

// Streaming log(sum(exp(l_i))) with rescaling; deterministic for a fixed
// visit order.
class LogSumExp {
public:
    void add(double l) {
        if (l > max_) {
            if (sum_ > 0) sum_ *= std::exp(max_ - l);
            max_ = l;
        }
        sum_ += std::exp(l - max_);
    }

    double value() const {
        return sum_ > 0 ? max_ + std::log(sum_) : -std::numeric_limits<double>::infinity();
    }

private:
    double max_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0;
};

void check_word_budget(const MoranSequence& sigma, int k, std::uint64_t budget) {
    const BigInt words = side_denominator(sigma, k);  // 3^{n0} 4^{n1}
    if (words > budget) throw BudgetExceeded("word enumeration budget exceeded");
}

double norm_denominator(const MoranSequence& sigma, int k) {
    const auto [n0, n1] = sigma.counts(k);
    return n0 * std::log(3.0) + n1 * std::log(4.0);
}

// Depth-first traversal of all words of length k; the row vector carries
// ones^T times the prefix product so each tree edge costs one row-matrix
// multiply. Leaves are visited in lexicographic word order.
template <typename Leaf>
void for_each_word(const MoranSequence& sigma, const Slope& slope, int k, Leaf&& leaf) {
    const std::vector<std::vector<TransferMatrix>> families = {build_family(0, slope),
                                                               build_family(1, slope)};
    std::vector<BigInt> ones(static_cast<std::size_t>(slope.order()), BigInt(1));

    auto recurse = [&](auto&& self, const std::vector<BigInt>& v, int depth) -> void {
        if (depth == k) {
            BigInt sum = 0;
            for (const BigInt& x : v) sum += x;
            leaf(sum);
            return;
        }
        const int tag = sigma.at(static_cast<std::size_t>(depth) + 1);
        for (const TransferMatrix& m : families[static_cast<std::size_t>(tag)]) {
            std::vector<BigInt> next(v.size(), BigInt(0));
            for (int p = 0; p < m.order; ++p) {
                if (v[static_cast<std::size_t>(p)] == 0) continue;
                for (int q = 0; q < m.order; ++q)
                    if (const int e = m.at(p, q))
                        next[static_cast<std::size_t>(q)] += v[static_cast<std::size_t>(p)] * e;
            }
            self(self, next, depth + 1);
        }
    };
    recurse(recurse, ones, 0);
}

}  // namespace

PressurePoint pressure_estimate_enumerated(double q, const MoranSequence& sigma,
                                           const Slope& slope, int k,
                                           std::uint64_t word_budget) {
    if (k < 1) throw std::invalid_argument("depth must be positive");
    check_word_budget(sigma, k, word_budget);
    LogSumExp lse;
    for_each_word(sigma, slope, k, [&](const BigInt& norm) { lse.add(q * log_big(norm)); });
    PressurePoint out;
    out.q = q;
    out.k = k;
    out.raw = lse.value() / k;
    out.normalized = lse.value() / norm_denominator(sigma, k);
    return out;
}

PressurePoint pressure_estimate(double q, const MoranSequence& sigma, const Slope& slope,
                                int k, std::uint64_t word_budget) {
    if (k < 1) throw std::invalid_argument("depth must be positive");
    if (q == 0.0) {
        PressurePoint out;
        out.q = 0;
        out.k = k;
        out.raw = norm_denominator(sigma, k) / k;
        out.normalized = 1.0;
        return out;
    }
    if (q == 1.0) {
        const BigInt sum = pressure_q1_sum_factored(sigma, slope, k);
        PressurePoint out;
        out.q = 1;
        out.k = k;
        out.raw = log_big(sum) / k;
        out.normalized = log_big(sum) / norm_denominator(sigma, k);
        return out;
    }
    return pressure_estimate_enumerated(q, sigma, slope, k, word_budget);
}

BigInt pressure_q1_sum_enumerated(const MoranSequence& sigma, const Slope& slope, int k,
                                  std::uint64_t word_budget) {
    check_word_budget(sigma, k, word_budget);
    BigInt total = 0;
    for_each_word(sigma, slope, k, [&](const BigInt& norm) { total += norm; });
    return total;
}

BigInt pressure_q1_sum_factored(const MoranSequence& sigma, const Slope& slope, int k) {
    // sum_x A_x = prod_i (sum_j A_{sigma_i}^j); the entry sum of that
    // product equals the enumerated sum of norms.
    const int order = slope.order();
    std::vector<std::vector<BigInt>> level_sum(2);
    for (int tag = 0; tag < 2; ++tag) {
        std::vector<BigInt> s(static_cast<std::size_t>(order) * order, BigInt(0));
        for (const TransferMatrix& m : build_family(tag, slope))
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += m.entries[i];
        level_sum[static_cast<std::size_t>(tag)] = std::move(s);
    }
    std::vector<BigInt> v(static_cast<std::size_t>(order), BigInt(1));  // ones^T
    for (int i = 1; i <= k; ++i) {
        const auto& m = level_sum[static_cast<std::size_t>(sigma.at(static_cast<std::size_t>(i)))];
        std::vector<BigInt> next(v.size(), BigInt(0));
        for (int p = 0; p < order; ++p)
            for (int q = 0; q < order; ++q)
                next[static_cast<std::size_t>(q)] +=
                    v[static_cast<std::size_t>(p)] * m[static_cast<std::size_t>(p) * order + q];
        v = std::move(next);
    }
    BigInt sum = 0;
    for (const BigInt& x : v) sum += x;
    return sum;
}

std::vector<double> word_log_norms(const MoranSequence& sigma, const Slope& slope, int k,
                                   std::uint64_t word_budget) {
    check_word_budget(sigma, k, word_budget);
    std::vector<double> out;
    out.reserve(side_denominator(sigma, k).convert_to<std::size_t>());
    for_each_word(sigma, slope, k, [&](const BigInt& norm) { out.push_back(log_big(norm)); });
    return out;
}

double lyapunov_estimate(std::span<const int> symbols, const MoranSequence& sigma,
                         const Slope& slope, int k) {
    if (k < 1) throw std::invalid_argument("depth must be positive");
    if (symbols.size() < static_cast<std::size_t>(k))
        throw std::invalid_argument("symbol prefix shorter than k");
    const std::vector<std::vector<TransferMatrix>> families = {build_family(0, slope),
                                                               build_family(1, slope)};
    const int order = slope.order();
    std::vector<BigInt> v(static_cast<std::size_t>(order), BigInt(1));
    for (int i = 1; i <= k; ++i) {
        const int tag = sigma.at(static_cast<std::size_t>(i));
        const int x = symbols[static_cast<std::size_t>(i - 1)];
        if (x < 0 || x >= label_count(tag))
            throw InvalidDigit("symbol out of alphabet at position " + std::to_string(i));
        const TransferMatrix& m = families[static_cast<std::size_t>(tag)][static_cast<std::size_t>(x)];
        std::vector<BigInt> next(v.size(), BigInt(0));
        for (int p = 0; p < order; ++p)
            if (v[static_cast<std::size_t>(p)] != 0)
                for (int q = 0; q < order; ++q)
                    if (const int e = m.at(p, q))
                        next[static_cast<std::size_t>(q)] += v[static_cast<std::size_t>(p)] * e;
        v = std::move(next);
    }
    BigInt sum = 0;
    for (const BigInt& x : v) sum += x;
    return log_big(sum) / k;
}

double cylinder_measure(std::span<const int> word, double q, const MoranSequence& sigma,
                        const Slope& slope, std::uint64_t word_budget) {
    const int n = static_cast<int>(word.size());
    if (n < 1) throw std::invalid_argument("cylinder word must be nonempty");
    const double log_num = q * lyapunov_estimate(word, sigma, slope, n) * n;
    check_word_budget(sigma, n, word_budget);
    LogSumExp lse;
    for_each_word(sigma, slope, n, [&](const BigInt& norm) { lse.add(q * log_big(norm)); });
    return std::exp(log_num - lse.value());
}

SpectrumBound spectrum_upper_bound(double alpha, const MoranSequence& sigma,
                                   const Slope& slope, int k, std::span<const double> q_grid,
                                   std::uint64_t word_budget) {
    if (q_grid.empty()) throw std::invalid_argument("q grid must be nonempty");
    const std::vector<double> logs = word_log_norms(sigma, slope, k, word_budget);
    const double denom = norm_denominator(sigma, k);
    SpectrumBound best;
    best.alpha = alpha;
    best.bound = std::numeric_limits<double>::infinity();
    for (double q : q_grid) {
        LogSumExp lse;
        for (double l : logs) lse.add(q * l);
        const double value = -q * alpha + lse.value() / denom;
        if (value < best.bound) {
            best.bound = value;
            best.minimizing_q = q;
        }
    }
    return best;
}

std::optional<Witness> theorem3_witness(const MoranSequence& sigma, const Slope& slope,
                                        int k, std::span<const double> q_grid,
                                        std::uint64_t word_budget) {
    if (q_grid.empty()) throw std::invalid_argument("q grid must be nonempty");
    const std::vector<double> logs = word_log_norms(sigma, slope, k, word_budget);
    const double denom = norm_denominator(sigma, k);
    const double s = carpet_dimension(sigma);
    std::optional<Witness> best;
    for (double q : q_grid) {
        if (q < 0 || q > 1) throw std::invalid_argument("witness grid must lie in [0,1]");
        LogSumExp lse;
        for (double l : logs) lse.add(q * l);
        const double margin = lse.value() / denom - ((s - 1) * q + 1);
        if (margin < 0 && (!best || margin < best->margin)) best = Witness{q, margin};
    }
    return best;
}

}  // namespace moran
