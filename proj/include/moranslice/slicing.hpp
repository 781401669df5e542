#pragma once

#include <cstdint>
#include <vector>

#include "moranslice/carpet.hpp"
#include "moranslice/errors.hpp"
#include "moranslice/rational.hpp"

namespace moran {

// Rational slope tan(theta) = M/N in lowest terms, theta in [0, pi/2).
// The line y = (M/N) x + a meets the unit square iff a lies in
// J = [-M/N, 1], and the lattice of a has exactly N+M points.
class Slope {
public:
    Slope(long M, long N);

    long M() const { return m_; }
    long N() const { return n_; }
    int order() const { return static_cast<int>(n_ + m_); }

    Rational tangent() const { return Rational(m_, n_); }
    Rational j_lo() const { return Rational(-m_, n_); }

    bool contains(const Rational& a) const;

    // Left endpoint of the lattice interval I_i = ((-M-1+i)/N, (-M+i)/N).
    Rational interval_lo(int i) const { return Rational(-m_ - 1 + i, n_); }
    Rational interval_hi(int i) const { return Rational(-m_ + i, n_); }

private:
    long m_, n_;
};

// x -> b*x + d1*M/N - d2 where b is the level base. Throws InvalidDigit.
Rational interval_map_forward(int level_tag, const Digit& d, const Rational& x,
                              const Slope& slope);

// Inverse of interval_map_forward.
Rational interval_map_inverse(int level_tag, const Digit& d, const Rational& x,
                              const Slope& slope);

// Greedy mixed-radix expansion of an intercept:
//   a = (-M-1+k)/N + (1/N) sum_i xi_i / (3^{n0(i)} 4^{n1(i)})
// with xi_i in {0,1,2} at 0-levels and {0,1,2,3} at 1-levels.
struct GreedyExpansion {
    int k = 1;                // containing lattice interval, 1..N+M
    std::vector<int> digits;  // xi_1 .. xi_depth
    bool boundary = false;    // expansion terminates at or before depth
};

GreedyExpansion greedy_expand(const Rational& a, const MoranSequence& sigma,
                              const Slope& slope, int depth);

// Evaluates the finite sum of an expansion back to a rational.
Rational expansion_value(const GreedyExpansion& exp, const MoranSequence& sigma,
                         const Slope& slope);

// The N+M points {a + i/N} inside J, sorted ascending; points[i0-1] == a.
struct GammaLattice {
    std::vector<Rational> points;
    int i0 = 0;  // 1-based rank of a itself
};

GammaLattice gamma_lattice(const Rational& a, const Slope& slope);

// Closed rectangle vs closed line: a in [y_lo - t*x_hi, y_hi - t*x_lo],
// t = M/N. Touching counts.
bool line_cell_intersects(const Rect& rect, const Slope& slope, const Rational& a);

// Exact number of level-n cells whose closed square meets the line,
// by pruned tree descent over the cell hierarchy (children of a cell lie
// inside it, so non-intersecting cells have no intersecting descendants).
// Throws BudgetExceeded once more than cell_budget cells are visited.
std::uint64_t count_oracle(const Rational& a, const MoranSequence& sigma,
                           const Slope& slope, int n,
                           std::uint64_t cell_budget = 10'000'000);

// Same count via the interval maps: words whose forward orbit of a stays
// in J at the final step of each prefix. Independent route, kept for
// cross-checks against the geometric descent.
std::uint64_t count_oracle_interval(const Rational& a, const MoranSequence& sigma,
                                    const Slope& slope, int n,
                                    std::uint64_t cell_budget = 10'000'000);

}  // namespace moran
