#pragma once

/**
 * @file taut.hpp
 * @brief The taut foliation decision for small Seifert fibered spaces.
 *
 * decide_taut classifies a rational homology sphere as admitting a taut
 * (in fact horizontal, hence analytic) foliation or admitting none at all,
 * with the regularity class at which non-existence holds. The decision is a
 * fixed rule cascade on b0 = -c of the normalized invariant:
 *
 *   e = 0             -> not applicable (not a rational homology sphere)
 *   n <= 2            -> none, already in C0 (lens spaces and the 3-sphere)
 *   b0 <= 0 or b0 >= n -> none (C2; C0 when n = 3)
 *   2 <= b0 <= n-2    -> admits, by the interval criterion on boundary slopes
 *   b0 = n-1          -> reverse orientation (lands at b0 = 1) and continue
 *   b0 = 1            -> admits exactly when a witness pair (m, alpha) exists
 */

#include "classify.hpp"
#include "error.hpp"
#include "invariant.hpp"
#include "property_star.hpp"

#include <optional>
#include <vector>

namespace seifert {

enum class VerdictTag { AdmitsTautAnalytic, NoTautC2, NoTautC0, NotApplicable };

inline const char* to_string(VerdictTag t) {
    switch (t) {
    case VerdictTag::AdmitsTautAnalytic: return "AdmitsTautAnalytic";
    case VerdictTag::NoTautC2: return "NoTautC2";
    case VerdictTag::NoTautC0: return "NoTautC0";
    case VerdictTag::NotApplicable: return "NotApplicable";
    }
    return "?";
}

enum class VerdictReason {
    Ehn1,              // b0 within [2, n-2]
    Ehn2OutOfRange,    // b0 outside [1, n-1]
    PropertyStarFound, // b0 = 1 and the witness search succeeded
    PropertyStarEmpty, // b0 = 1 and the witness search is exhausted
    SmallN,            // fewer than three exceptional fibers
    NotQHSInput,       // Euler number zero
};

inline const char* to_string(VerdictReason r) {
    switch (r) {
    case VerdictReason::Ehn1: return "Ehn1";
    case VerdictReason::Ehn2OutOfRange: return "Ehn2OutOfRange";
    case VerdictReason::PropertyStarFound: return "PropertyStarFound";
    case VerdictReason::PropertyStarEmpty: return "PropertyStarEmpty";
    case VerdictReason::SmallN: return "SmallN";
    case VerdictReason::NotQHSInput: return "NotQHSInput";
    }
    return "?";
}

struct TautVerdict {
    VerdictTag tag;
    VerdictReason reason;
    std::optional<PropertyStarWitness> witness; // present iff PropertyStarFound
    // True when the b0 = n-1 case was reduced to b0 = 1 by reversing
    // orientation; the witness then certifies the reversed presentation.
    bool flipped = false;
};

inline std::vector<Rational> sorted_coefficients(const SeifertInvariant& m) {
    std::vector<Rational> coeffs;
    coeffs.reserve(m.slopes.size());
    for (const auto& s : m.slopes) coeffs.push_back(s.value());
    return coeffs; // normalized invariants are already sorted non-increasing
}

// The verdict is orientation-invariant: both members of a flip pair get the
// same answer. Inputs need not be normalized.
inline TautVerdict decide_taut(const SeifertInvariant& input) {
    SeifertInvariant m = normalize(input);
    TautVerdict v;
    if (euler_number(m).is_zero()) {
        v.tag = VerdictTag::NotApplicable;
        v.reason = VerdictReason::NotQHSInput;
        return v;
    }
    Int n = static_cast<long long>(m.fiber_count());
    if (n <= 2) {
        v.tag = VerdictTag::NoTautC0;
        v.reason = VerdictReason::SmallN;
        return v;
    }
    Int b0 = m.b0();
    if (b0 <= 0 || b0 >= n) {
        v.tag = n == 3 ? VerdictTag::NoTautC0 : VerdictTag::NoTautC2;
        v.reason = VerdictReason::Ehn2OutOfRange;
        return v;
    }
    if (b0 >= 2 && b0 <= n - 2) {
        v.tag = VerdictTag::AdmitsTautAnalytic;
        v.reason = VerdictReason::Ehn1;
        return v;
    }
    if (b0 == n - 1) {
        m = flip(m);
        v.flipped = true;
        b0 = m.b0(); // now 1
    }
    // b0 = 1: existence is equivalent to a witness pair for the coefficients.
    v.witness = search_witness(sorted_coefficients(m));
    if (v.witness) {
        v.tag = VerdictTag::AdmitsTautAnalytic;
        v.reason = VerdictReason::PropertyStarFound;
    } else {
        v.tag = n == 3 ? VerdictTag::NoTautC0 : VerdictTag::NoTautC2;
        v.reason = VerdictReason::PropertyStarEmpty;
    }
    return v;
}

} // namespace seifert
