#pragma once

// Homology type, base orbifold geometry, and the handful of exceptional
// small manifolds that the existence arguments treat separately.

#include "error.hpp"
#include "invariant.hpp"
#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace seifert {

enum class HomologyTag { NotQHS, ZHS, NonIntegralQHS };

inline const char* to_string(HomologyTag t) {
    switch (t) {
    case HomologyTag::NotQHS: return "NotQHS";
    case HomologyTag::ZHS: return "ZHS";
    case HomologyTag::NonIntegralQHS: return "NonIntegralQHS";
    }
    return "?";
}

struct HomologyClass {
    HomologyTag tag;
    int epsilon = 0; // +1 or -1, meaningful only when tag == ZHS
    Rational euler;  // the rational Euler number of the input
};

// A rational homology sphere has e != 0; an integral one additionally has
// e * prod(a_i) = +-1, the sign being epsilon. Integral inputs must have
// pairwise coprime multiplicities; that is a consequence, not a hypothesis,
// so its failure indicates a corrupted invariant.
inline HomologyClass homology_class(const SeifertInvariant& m) {
    if (!is_normalized(m))
        fail(ErrorKind::InvalidInput, "homology_class requires a normalized invariant");
    HomologyClass h;
    h.euler = euler_number(m);
    if (h.euler.is_zero()) {
        h.tag = HomologyTag::NotQHS;
        return h;
    }
    Int prod = 1;
    for (const auto& s : m.slopes) prod *= s.mult;
    Rational scaled = h.euler * Rational(prod);
    if (!scaled.is_integer())
        throw std::logic_error("product of multiplicities times Euler number must be integral");
    if (scaled.num() == 1 || scaled.num() == -1) {
        h.tag = HomologyTag::ZHS;
        h.epsilon = scaled.num() == 1 ? 1 : -1;
        for (std::size_t i = 0; i < m.slopes.size(); ++i)
            for (std::size_t j = i + 1; j < m.slopes.size(); ++j)
                if (gcd(m.slopes[i].mult, m.slopes[j].mult) != 1)
                    throw std::logic_error(
                        "integral homology sphere with non-coprime multiplicities");
    } else {
        h.tag = HomologyTag::NonIntegralQHS;
    }
    return h;
}

enum class GeometryTag { Spherical, Nil, SL2R };

inline const char* to_string(GeometryTag t) {
    switch (t) {
    case GeometryTag::Spherical: return "Spherical";
    case GeometryTag::Nil: return "Nil";
    case GeometryTag::SL2R: return "SL2R";
    }
    return "?";
}

struct GeometryClass {
    GeometryTag tag;
    Rational chi; // orbifold Euler characteristic of the base
};

// Geometry of the base orbifold, decided by the sign of
// chi = 2 - n + sum(1/a_i). Only meaningful for rational homology spheres
// with at least three exceptional fibers.
inline GeometryClass geometry(const SeifertInvariant& m) {
    if (!is_normalized(m))
        fail(ErrorKind::InvalidInput, "geometry requires a normalized invariant");
    if (euler_number(m).is_zero())
        fail(ErrorKind::GeometryNotApplicable, "geometry classification needs e != 0");
    if (m.fiber_count() < 3)
        fail(ErrorKind::GeometryNotApplicable,
             "geometry classification needs at least three exceptional fibers");
    GeometryClass g;
    g.chi = Rational(2 - static_cast<long long>(m.fiber_count()));
    for (const auto& s : m.slopes) g.chi += Rational(1, s.mult);
    int sg = g.chi.sign();
    g.tag = sg > 0 ? GeometryTag::Spherical : (sg == 0 ? GeometryTag::Nil : GeometryTag::SL2R);
    return g;
}

enum class ExceptionalType { SphereLike, LensLike, Poincare, Generic };

inline const char* to_string(ExceptionalType t) {
    switch (t) {
    case ExceptionalType::SphereLike: return "SphereLike";
    case ExceptionalType::LensLike: return "LensLike";
    case ExceptionalType::Poincare: return "Poincare";
    case ExceptionalType::Generic: return "Generic";
    }
    return "?";
}

// Fewer than three exceptional fibers gives a lens space (the three-sphere
// exactly when the homology is integral). Among honest Seifert homology
// spheres only multiplicities {2,3,5} are spherical; that manifold, in either
// orientation, is singled out because it carries no taut foliation at all.
inline ExceptionalType detect_exceptional(const SeifertInvariant& m) {
    if (!is_normalized(m))
        fail(ErrorKind::InvalidInput, "detect_exceptional requires a normalized invariant");
    HomologyClass h = homology_class(m);
    if (m.fiber_count() <= 2)
        return h.tag == HomologyTag::ZHS ? ExceptionalType::SphereLike : ExceptionalType::LensLike;
    if (h.tag == HomologyTag::ZHS && m.fiber_count() == 3) {
        std::vector<Int> mults;
        for (const auto& s : m.slopes) mults.push_back(s.mult);
        std::sort(mults.begin(), mults.end());
        if (mults[0] == 2 && mults[1] == 3 && mults[2] == 5) return ExceptionalType::Poincare;
    }
    return ExceptionalType::Generic;
}

} // namespace seifert
