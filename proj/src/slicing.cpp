#include "moranslice/slicing.hpp"

#include <numeric>

namespace moran {

namespace {

BigInt floor_rat(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

}  // namespace

Slope::Slope(long M, long N) : m_(M), n_(N) {
    if (N < 1) throw std::invalid_argument("slope denominator N must be positive");
    if (M < 0) throw std::invalid_argument("slope numerator M must be nonnegative");
    if (std::gcd(M, N) != 1) throw std::invalid_argument("slope not in lowest terms");
}

bool Slope::contains(const Rational& a) const { return a >= j_lo() && a <= 1; }

Rational interval_map_forward(int level_tag, const Digit& d, const Rational& x,
                              const Slope& slope) {
    if (!digit_valid(level_tag, d))
        throw InvalidDigit("digit not in digit set of tag " + std::to_string(level_tag));
    return level_base(level_tag) * x + Rational(d.d1 * slope.M(), slope.N()) - d.d2;
}

Rational interval_map_inverse(int level_tag, const Digit& d, const Rational& x,
                              const Slope& slope) {
    if (!digit_valid(level_tag, d))
        throw InvalidDigit("digit not in digit set of tag " + std::to_string(level_tag));
    return (x - Rational(d.d1 * slope.M(), slope.N()) + d.d2) / level_base(level_tag);
}

GreedyExpansion greedy_expand(const Rational& a, const MoranSequence& sigma,
                              const Slope& slope, int depth) {
    if (!slope.contains(a))
        throw OutOfRange("intercept " + rational_to_string(a) + " outside J");
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");

    GreedyExpansion out;
    if (a == 1) {
        out.k = slope.order();
    } else {
        out.k = static_cast<int>(floor_rat(slope.N() * a + slope.M()).convert_to<long>()) + 1;
    }
    // Position of a inside [interval_lo(k), interval_hi(k)), rescaled to [0,1).
    Rational frac = slope.N() * a + slope.M() + 1 - out.k;
    out.boundary = frac == 0;
    out.digits.reserve(static_cast<std::size_t>(depth));
    for (int i = 1; i <= depth; ++i) {
        const int base = level_base(sigma.at(static_cast<std::size_t>(i)));
        frac *= base;
        const int digit = static_cast<int>(floor_rat(frac).convert_to<long>());
        frac -= digit;
        out.digits.push_back(digit);
        if (frac == 0) out.boundary = true;
    }
    return out;
}

Rational expansion_value(const GreedyExpansion& exp, const MoranSequence& sigma,
                         const Slope& slope) {
    Rational sum = 0;
    BigInt denom = 1;
    for (std::size_t i = 0; i < exp.digits.size(); ++i) {
        const int tag = sigma.at(i + 1);
        const int base = level_base(tag);
        if (exp.digits[i] < 0 || exp.digits[i] >= base)
            throw InvalidDigit("expansion digit " + std::to_string(exp.digits[i]) +
                               " out of range for level " + std::to_string(i + 1));
        denom *= base;
        sum += Rational(exp.digits[i], denom);
    }
    return slope.interval_lo(exp.k) + sum / slope.N();
}

GammaLattice gamma_lattice(const Rational& a, const Slope& slope) {
    if (!slope.contains(a))
        throw OutOfRange("intercept " + rational_to_string(a) + " outside J");
    // Half-open window [-M/N, 1), switched to (-M/N, 1] when a = 1 so the
    // intercept itself always survives.
    const bool right_closed = a == 1;
    GammaLattice out;
    const Rational step(1, slope.N());
    // Smallest i with a + i/N inside the window.
    Rational lo = slope.j_lo();
    BigInt i = floor_rat((lo - a) * slope.N());
    while (a + i * step < lo || (right_closed && a + i * step == lo)) ++i;
    for (int count = 0; count < slope.order(); ++count, ++i) {
        out.points.push_back(a + i * step);
        if (i == 0) out.i0 = count + 1;
    }
    return out;
}

bool line_cell_intersects(const Rect& rect, const Slope& slope, const Rational& a) {
    const Rational t = slope.tangent();
    return a >= rect.y_lo - t * rect.x_hi && a <= rect.y_hi - t * rect.x_lo;
}

namespace {

struct OracleState {
    std::uint64_t visited = 0;
    std::uint64_t budget = 0;

    void charge() {
        if (++visited > budget) throw BudgetExceeded("oracle cell budget exceeded");
    }
};

std::uint64_t descend_rect(const Rect& rect, int level, int n, const Rational& a,
                           const MoranSequence& sigma, const Slope& slope,
                           OracleState& state) {
    state.charge();
    if (!line_cell_intersects(rect, slope, a)) return 0;
    if (level == n) return 1;
    const int tag = sigma.at(static_cast<std::size_t>(level) + 1);
    const int base = level_base(tag);
    const Rational side = rect.side() / base;
    std::uint64_t total = 0;
    for (const Digit& d : digit_set(tag)) {
        Rect child;
        child.x_lo = rect.x_lo + d.d1 * side;
        child.x_hi = child.x_lo + side;
        child.y_lo = rect.y_lo + d.d2 * side;
        child.y_hi = child.y_lo + side;
        total += descend_rect(child, level + 1, n, a, sigma, slope, state);
    }
    return total;
}

std::uint64_t descend_interval(const Rational& x, int level, int n,
                               const MoranSequence& sigma, const Slope& slope,
                               OracleState& state) {
    state.charge();
    if (!slope.contains(x)) return 0;
    if (level == n) return 1;
    const int tag = sigma.at(static_cast<std::size_t>(level) + 1);
    std::uint64_t total = 0;
    for (const Digit& d : digit_set(tag))
        total += descend_interval(interval_map_forward(tag, d, x, slope), level + 1, n,
                                  sigma, slope, state);
    return total;
}

}  // namespace

std::uint64_t count_oracle(const Rational& a, const MoranSequence& sigma,
                           const Slope& slope, int n, std::uint64_t cell_budget) {
    if (!slope.contains(a))
        throw OutOfRange("intercept " + rational_to_string(a) + " outside J");
    if (n < 0) throw std::invalid_argument("depth must be nonnegative");
    OracleState state{0, cell_budget};
    const Rect unit{0, 1, 0, 1};
    return descend_rect(unit, 0, n, a, sigma, slope, state);
}

std::uint64_t count_oracle_interval(const Rational& a, const MoranSequence& sigma,
                                    const Slope& slope, int n, std::uint64_t cell_budget) {
    if (!slope.contains(a))
        throw OutOfRange("intercept " + rational_to_string(a) + " outside J");
    if (n < 0) throw std::invalid_argument("depth must be nonnegative");
    OracleState state{0, cell_budget};
    return descend_interval(a, 0, n, sigma, slope, state);
}

}  // namespace moran
