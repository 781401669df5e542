#include "moranslice/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "moranslice/errors.hpp"

namespace moran {

const std::vector<Digit>& digit_set(int level_tag) {
    static const std::vector<Digit> omega0 = {
        {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {2, 2},
    };
    static const std::vector<Digit> omega1 = {
        {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 3},
        {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {3, 3},
    };
    switch (level_tag) {
        case 0: return omega0;
        case 1: return omega1;
        default: throw InvalidLabel("level tag must be 0 or 1");
    }
}

bool digit_valid(int level_tag, const Digit& d) {
    const auto& set = digit_set(level_tag);
    return std::find(set.begin(), set.end(), d) != set.end();
}

int level_base(int level_tag) {
    if (level_tag != 0 && level_tag != 1) throw InvalidLabel("level tag must be 0 or 1");
    return level_tag == 0 ? 3 : 4;
}

MoranSequence::MoranSequence(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("period must be nonempty");
    auto check = [](const std::string& s) {
        for (char c : s)
            if (c != '0' && c != '1')
                throw std::invalid_argument("sigma spec may contain only 0 and 1");
    };
    check(prefix_);
    check(period_);
}

MoranSequence MoranSequence::parse(std::string_view spec) {
    const auto open = spec.find('(');
    const auto close = spec.find(')');
    if (open == std::string_view::npos || close != spec.size() - 1 || close < open)
        throw std::invalid_argument("sigma spec must look like \"prefix(period)\": " +
                                    std::string(spec));
    return MoranSequence(std::string(spec.substr(0, open)),
                         std::string(spec.substr(open + 1, close - open - 1)));
}

int MoranSequence::at(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("sigma positions are 1-based");
    if (i <= prefix_.size()) return prefix_[i - 1] - '0';
    return period_[(i - prefix_.size() - 1) % period_.size()] - '0';
}

std::pair<long, long> MoranSequence::counts(long k) const {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    long ones = 0;
    const long plen = static_cast<long>(prefix_.size());
    const long head = std::min(k, plen);
    ones += std::count(prefix_.begin(), prefix_.begin() + head, '1');
    long rest = k - head;
    if (rest > 0) {
        const long L = static_cast<long>(period_.size());
        const long per = static_cast<long>(std::count(period_.begin(), period_.end(), '1'));
        ones += (rest / L) * per;
        ones += std::count(period_.begin(), period_.begin() + rest % L, '1');
    }
    return {k - ones, ones};
}

Rational MoranSequence::freq0() const {
    const long L = static_cast<long>(period_.size());
    const long ones = static_cast<long>(std::count(period_.begin(), period_.end(), '1'));
    return Rational(L - ones, L);
}

Rational MoranSequence::freq1() const { return 1 - freq0(); }

std::pair<long, long> MoranSequence::reduced_frequencies() const {
    const long L = static_cast<long>(period_.size());
    const long ones = static_cast<long>(std::count(period_.begin(), period_.end(), '1'));
    const long zeros = L - ones;
    const long g = std::gcd(zeros, ones);
    return {zeros / g, ones / g};
}

std::string MoranSequence::spec() const { return prefix_ + "(" + period_ + ")"; }

Rect cell_rect(const CellWord& word, const MoranSequence& sigma) {
    Rational x = 0, y = 0;
    BigInt denom = 1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int tag = sigma.at(i + 1);
        if (!digit_valid(tag, word[i]))
            throw InvalidDigit("digit (" + std::to_string(word[i].d1) + "," +
                               std::to_string(word[i].d2) + ") not valid at level " +
                               std::to_string(i + 1));
        denom *= level_base(tag);
        x += Rational(word[i].d1, denom);
        y += Rational(word[i].d2, denom);
    }
    const Rational side(BigInt(1), denom);
    return Rect{x, x + side, y, y + side};
}

BigInt side_denominator(const MoranSequence& sigma, long n) {
    const auto [n0, n1] = sigma.counts(n);
    return pow_big(3, static_cast<unsigned>(n0)) * pow_big(4, static_cast<unsigned>(n1));
}

BigInt cell_count(const MoranSequence& sigma, long n) {
    const auto [n0, n1] = sigma.counts(n);
    return pow_big(8, static_cast<unsigned>(n0)) * pow_big(12, static_cast<unsigned>(n1));
}

namespace {

double dimension_from_pair(long zeros, long ones) {
    const double num = zeros * std::log(8.0) + ones * std::log(12.0);
    const double den = zeros * std::log(3.0) + ones * std::log(4.0);
    return num / den;
}

}  // namespace

double carpet_dimension(const MoranSequence& sigma) {
    const auto [zeros, ones] = sigma.reduced_frequencies();
    return dimension_from_pair(zeros, ones);
}

double carpet_dimension_at_depth(const MoranSequence& sigma, long k) {
    if (k < 1) throw std::invalid_argument("depth must be positive");
    auto [n0, n1] = sigma.counts(k);
    const long g = std::gcd(n0, n1);
    return dimension_from_pair(n0 / g, n1 / g);
}

}  // namespace moran
