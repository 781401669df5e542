#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moranslice/rational.hpp"

namespace moran {

// One subdivision digit d = (d1, d2): horizontal and vertical cell index
// at a single level of the construction.
struct Digit {
    int d1 = 0;
    int d2 = 0;

    friend bool operator==(const Digit&, const Digit&) = default;
};

// The digit set for one level tag: 8 digits at a 0-level (base 3),
// 12 digits at a 1-level (base 4). Throws InvalidLabel otherwise.
const std::vector<Digit>& digit_set(int level_tag);

bool digit_valid(int level_tag, const Digit& d);

// Subdivision base at a level: 3 for tag 0, 4 for tag 1.
int level_base(int level_tag);

// The level sequence: a finite 0/1 prefix followed by a repeating
// nonempty 0/1 period, so every position i >= 1 has a well defined tag
// and the limiting 0/1 frequencies are exact rationals.
class MoranSequence {
public:
    MoranSequence(std::string prefix, std::string period);

    // Grammar shared with the CLI: optional 0/1 prefix, then the period
    // in parentheses, e.g. "(01)", "110(0)", "(1)".
    static MoranSequence parse(std::string_view spec);

    // Tag at 1-based position i.
    int at(std::size_t i) const;

    // (n0, n1): how many 0s and 1s among the first k positions.
    std::pair<long, long> counts(long k) const;

    // Limiting frequencies of 0 and 1, from the period alone.
    Rational freq0() const;
    Rational freq1() const;

    // Period letter counts reduced by their gcd. The dimension formula
    // depends only on this reduced pair.
    std::pair<long, long> reduced_frequencies() const;

    const std::string& prefix() const { return prefix_; }
    const std::string& period() const { return period_; }
    std::string spec() const;

private:
    std::string prefix_;
    std::string period_;
};

// A level-n cell address: digit i must belong to the digit set of tag
// sigma_i. The empty word is the unit square.
using CellWord = std::vector<Digit>;

// Axis-aligned square with exact rational corners inside [0,1]^2.
struct Rect {
    Rational x_lo, x_hi, y_lo, y_hi;

    Rational side() const { return x_hi - x_lo; }
};

// Image of the unit square under the composition of the word's
// contractions. Throws InvalidDigit if some digit is not valid for its
// level tag.
Rect cell_rect(const CellWord& word, const MoranSequence& sigma);

// 3^{n0(n)} * 4^{n1(n)}: reciprocal of the side length of a level-n cell.
BigInt side_denominator(const MoranSequence& sigma, long n);

// 8^{n0(n)} * 12^{n1(n)}: number of level-n cells.
BigInt cell_count(const MoranSequence& sigma, long n);

// Box (= Hausdorff) dimension of the carpet itself:
// (n0 log8 + n1 log12) / (n0 log3 + n1 log4) over limiting frequencies.
double carpet_dimension(const MoranSequence& sigma);

// Finite-depth version log(cell count) / log(1/side) at depth k, with the
// exponent pair reduced so period-multiple depths reproduce
// carpet_dimension bit for bit on purely periodic sequences.
double carpet_dimension_at_depth(const MoranSequence& sigma, long k);

}  // namespace moran
