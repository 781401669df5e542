#pragma once

#include <span>
#include <string>
#include <vector>

#include "moranslice/slicing.hpp"

namespace moran {

// (N+M)x(N+M) nonnegative integer matrix attached to one level tag and
// one subinterval label j. Entry (p,q) counts digits whose interval map
// sends the j-th subinterval of I_p exactly onto I_q.
struct TransferMatrix {
    int order = 0;
    int level_tag = 0;
    int label = 0;
    std::vector<int> entries;  // row-major, order*order

    int at(int p, int q) const { return entries[static_cast<std::size_t>(p) * order + q]; }
    int& at(int p, int q) { return entries[static_cast<std::size_t>(p) * order + q]; }

    friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;

    // One row per line, space-separated decimal entries.
    std::string to_string() const;
};

// Valid labels: j in {0,1,2} at tag 0, {0,1,2,3} at tag 1.
int label_count(int level_tag);

// Builds the matrix by exact interval-image comparison: for each digit d,
// push the open subinterval through the forward map and match it against
// the lattice intervals.
TransferMatrix build_matrix_semantic(int level_tag, int j, const Slope& slope);

// Builds the same matrix by counting digit solutions of
//   d1*M - d2*N = 2M + 2 + q - 3p - j   (tag 0)
//   d1*M - d2*N = 3M + 3 + q - 4p - j   (tag 1)
// Must equal the semantic build entrywise.
TransferMatrix build_matrix_closed_form(int level_tag, int j, const Slope& slope);

// All matrices of one tag, labels in order.
std::vector<TransferMatrix> build_family(int level_tag, const Slope& slope);

// Sum of all matrix entries.
long matrix_norm(const TransferMatrix& m);

// ||e_row * A_1 * ... * A_n||: row-vector product in arbitrary precision,
// then entry sum. Empty sequence yields 1. start_row is 1-based.
BigInt product_norm(std::span<const TransferMatrix> matrices, int start_row);

struct MatrixCount {
    BigInt value;
    bool boundary = false;  // greedy expansion terminated; see count caveat
};

// N_n(a) via the matrix product over the greedy digits of a. The boundary
// flag is set when the expansion terminates at or before depth n; the
// value is still returned but the product formula is only proven away
// from subinterval boundaries.
MatrixCount matrix_count(const Rational& a, const MoranSequence& sigma,
                         const Slope& slope, int n);

}  // namespace moran
