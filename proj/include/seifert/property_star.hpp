#pragma once

// The combinatorial slope condition that certifies a horizontal foliation,
// and the exhaustive search for its witnesses.

#include "error.hpp"
#include "rational.hpp"

#include <optional>
#include <vector>

namespace seifert {

struct PropertyStarWitness {
    Int m;     // strictly above alpha
    Int alpha; // in (0, m)

    friend bool operator==(const PropertyStarWitness& x, const PropertyStarWitness& y) {
        return x.m == y.m && x.alpha == y.alpha;
    }
    friend bool operator!=(const PropertyStarWitness& x, const PropertyStarWitness& y) {
        return !(x == y);
    }
};

namespace detail {

inline void check_coefficients(const std::vector<Rational>& coeffs) {
    if (coeffs.size() < 3)
        fail(ErrorKind::InvalidInput, "need at least three coefficients");
    for (const auto& c : coeffs)
        if (c.sign() <= 0 || c >= Rational(1))
            fail(ErrorKind::InvalidInput, "coefficients must lie strictly between 0 and 1");
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] > coeffs[i - 1])
            fail(ErrorKind::InvalidInput, "coefficients must be sorted non-increasing");
}

} // namespace detail

// Tests, for sorted coefficients c1 >= c2 >= ... >= cn in (0,1) and integers
// 0 < alpha < m, the three strict bounds
//   (i)  c1 < (m - alpha) / m
//   (ii) c2 < alpha / m
//   (iii) ci < 1 / m for every i >= 3.
// Since the list is sorted, (iii) only needs the third entry.
inline bool property_star_holds(const std::vector<Rational>& coeffs,
                                const PropertyStarWitness& w) {
    detail::check_coefficients(coeffs);
    if (w.m <= 0 || w.alpha <= 0 || w.alpha >= w.m)
        fail(ErrorKind::InvalidInput, "witness must satisfy 0 < alpha < m");
    if (!(coeffs[0] < Rational(w.m - w.alpha, w.m))) return false;
    if (!(coeffs[1] < Rational(w.alpha, w.m))) return false;
    return coeffs[2] < Rational(Int(1), w.m);
}

// Condition (iii) caps every useful m: it forces m < a3/b3 for the third
// largest coefficient b3/a3. This is the largest m worth trying; values of m
// above it fail (iii) outright, so the search below is complete.
inline Int witness_search_bound(const std::vector<Rational>& coeffs) {
    detail::check_coefficients(coeffs);
    return strict_floor(coeffs[2].reciprocal());
}

// Exhaustive scan for the lexicographically smallest witness (m, alpha).
// For fixed m the valid alpha form the integers in the open interval
// (m*c2, m*(1-c1)) intersected with (0, m); everything is decided by exact
// floor/ceiling arithmetic.
inline std::optional<PropertyStarWitness> search_witness(const std::vector<Rational>& coeffs) {
    Int m_max = witness_search_bound(coeffs);
    const Rational& c1 = coeffs[0];
    const Rational& c2 = coeffs[1];
    for (Int m = 2; m <= m_max; ++m) {
        Int lo = (Rational(m) * c2).floor() + 1;    // smallest integer > m*c2
        if (lo < 1) lo = 1;
        Int hi = (Rational(m) * (Rational(1) - c1)).ceil() - 1; // largest < m*(1-c1)
        if (hi > m - 1) hi = m - 1;
        if (lo <= hi) return PropertyStarWitness{m, lo};
    }
    return std::nullopt;
}

} // namespace seifert
