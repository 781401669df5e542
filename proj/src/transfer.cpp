#include "moranslice/transfer.hpp"

#include <numeric>
#include <sstream>

namespace moran {

std::string TransferMatrix::to_string() const {
    std::ostringstream os;
    for (int p = 0; p < order; ++p) {
        for (int q = 0; q < order; ++q) {
            if (q) os << ' ';
            os << at(p, q);
        }
        os << '\n';
    }
    return os.str();
}

int label_count(int level_tag) { return level_base(level_tag); }

namespace {

void check_label(int level_tag, int j) {
    if (j < 0 || j >= label_count(level_tag))
        throw InvalidLabel("label " + std::to_string(j) + " invalid for tag " +
                           std::to_string(level_tag));
}

}  // namespace

TransferMatrix build_matrix_semantic(int level_tag, int j, const Slope& slope) {
    check_label(level_tag, j);
    const int base = level_base(level_tag);
    const int order = slope.order();
    TransferMatrix m{order, level_tag, j,
                     std::vector<int>(static_cast<std::size_t>(order) * order, 0)};
    const Rational sub(1, static_cast<long>(base) * slope.N());
    for (int p = 1; p <= order; ++p) {
        // j-th subinterval of I_p: thirds at tag 0, quarters at tag 1.
        const Rational lo = slope.interval_lo(p) + j * sub;
        const Rational hi = lo + sub;
        for (const Digit& d : digit_set(level_tag)) {
            const Rational img_lo = interval_map_forward(level_tag, d, lo, slope);
            const Rational img_hi = interval_map_forward(level_tag, d, hi, slope);
            for (int q = 1; q <= order; ++q) {
                if (img_lo == slope.interval_lo(q) && img_hi == slope.interval_hi(q))
                    ++m.at(p - 1, q - 1);
            }
        }
    }
    return m;
}

TransferMatrix build_matrix_closed_form(int level_tag, int j, const Slope& slope) {
    check_label(level_tag, j);
    const int base = level_base(level_tag);
    const int order = slope.order();
    TransferMatrix m{order, level_tag, j,
                     std::vector<int>(static_cast<std::size_t>(order) * order, 0)};
    const long M = slope.M();
    const long N = slope.N();
    for (int p = 1; p <= order; ++p) {
        for (int q = 1; q <= order; ++q) {
            const long target = (base - 1) * (M + 1) + q - static_cast<long>(base) * p - j;
            int count = 0;
            for (const Digit& d : digit_set(level_tag))
                if (d.d1 * M - d.d2 * N == target) ++count;
            m.at(p - 1, q - 1) = count;
        }
    }
    return m;
}

std::vector<TransferMatrix> build_family(int level_tag, const Slope& slope) {
    std::vector<TransferMatrix> out;
    for (int j = 0; j < label_count(level_tag); ++j)
        out.push_back(build_matrix_semantic(level_tag, j, slope));
    return out;
}

long matrix_norm(const TransferMatrix& m) {
    return std::accumulate(m.entries.begin(), m.entries.end(), 0L);
}

namespace {

std::vector<BigInt> row_times(const std::vector<BigInt>& v, const TransferMatrix& m) {
    std::vector<BigInt> out(static_cast<std::size_t>(m.order), BigInt(0));
    for (int p = 0; p < m.order; ++p) {
        if (v[static_cast<std::size_t>(p)] == 0) continue;
        for (int q = 0; q < m.order; ++q) {
            const int e = m.at(p, q);
            if (e) out[static_cast<std::size_t>(q)] += v[static_cast<std::size_t>(p)] * e;
        }
    }
    return out;
}

}  // namespace

BigInt product_norm(std::span<const TransferMatrix> matrices, int start_row) {
    if (matrices.empty()) return 1;
    const int order = matrices.front().order;
    if (start_row < 1 || start_row > order)
        throw OrderMismatch("start row out of range");
    std::vector<BigInt> v(static_cast<std::size_t>(order), BigInt(0));
    v[static_cast<std::size_t>(start_row - 1)] = 1;
    for (const TransferMatrix& m : matrices) {
        if (m.order != order) throw OrderMismatch("matrix orders differ in product");
        v = row_times(v, m);
    }
    BigInt sum = 0;
    for (const BigInt& x : v) sum += x;
    return sum;
}

MatrixCount matrix_count(const Rational& a, const MoranSequence& sigma,
                         const Slope& slope, int n) {
    const GreedyExpansion exp = greedy_expand(a, sigma, slope, n);
    // Matrices repeat with the period of sigma and labels; build each
    // (tag, j) pair once.
    std::vector<std::vector<TransferMatrix>> families;
    families.push_back(build_family(0, slope));
    families.push_back(build_family(1, slope));
    std::vector<BigInt> v(static_cast<std::size_t>(slope.order()), BigInt(0));
    v[static_cast<std::size_t>(exp.k - 1)] = 1;
    for (int i = 1; i <= n; ++i) {
        const int tag = sigma.at(static_cast<std::size_t>(i));
        const int j = exp.digits[static_cast<std::size_t>(i - 1)];
        v = row_times(v, families[static_cast<std::size_t>(tag)][static_cast<std::size_t>(j)]);
    }
    BigInt sum = 0;
    for (const BigInt& x : v) sum += x;
    return MatrixCount{sum, exp.boundary};
}

}  // namespace moran
