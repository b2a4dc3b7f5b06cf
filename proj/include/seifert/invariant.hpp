#pragma once

/**
 * @file invariant.hpp
 * @brief Surgery presentations of genus-zero Seifert fibered spaces.
 *
 * An invariant is an integer Euler part c together with a list of exceptional
 * slopes b/a. The rational Euler number of the presentation is
 * e = c + sum(b_i / a_i). The classical tuple notation with leading -b0 uses
 * b0 = -c; both conventions are printed by the CLI.
 *
 * The normalized form, used by everything downstream, has 0 < b_i < a_i and
 * a_i >= 2 for every slope, with slopes sorted by non-increasing value.
 */

#include "error.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seifert {

struct Slope {
    Int num;  // b, any sign before normalization
    Int mult; // a, the fiber multiplicity, always >= 1

    Slope(Int b, Int a) : num(std::move(b)), mult(std::move(a)) {
        if (mult <= 0)
            fail(ErrorKind::InvalidInvariant, "slope multiplicity must be positive, got " + mult.str());
        if (gcd(abs(num), mult) != 1)
            fail(ErrorKind::InvalidInvariant,
                 "slope " + num.str() + "/" + mult.str() + " is not in lowest terms");
    }

    Rational value() const { return Rational(num, mult); }

    friend bool operator==(const Slope& x, const Slope& y) {
        return x.num == y.num && x.mult == y.mult;
    }
    friend bool operator!=(const Slope& x, const Slope& y) { return !(x == y); }
};

struct SeifertInvariant {
    Int euler_part;            // c in e = c + sum(b_i/a_i); the tuple form carries -c
    std::vector<Slope> slopes;
    // How many times the orientation involution has been applied to reach this
    // presentation. Metadata only: it does not take part in equality.
    bool orientation_reversed = false;

    std::size_t fiber_count() const { return slopes.size(); }

    Int b0() const { return -euler_part; }

    friend bool operator==(const SeifertInvariant& x, const SeifertInvariant& y) {
        return x.euler_part == y.euler_part && x.slopes == y.slopes;
    }
    friend bool operator!=(const SeifertInvariant& x, const SeifertInvariant& y) {
        return !(x == y);
    }
};

inline SeifertInvariant make_invariant(Int euler_part, std::vector<std::pair<Int, Int>> raw) {
    SeifertInvariant m;
    m.euler_part = std::move(euler_part);
    m.slopes.reserve(raw.size());
    for (auto& [b, a] : raw) m.slopes.emplace_back(std::move(b), std::move(a));
    return m;
}

inline Rational euler_number(const SeifertInvariant& m) {
    Rational e(m.euler_part);
    for (const auto& s : m.slopes) e += s.value();
    return e;
}

// Non-increasing by value; among equal values the smaller multiplicity first.
// Canonical fractions with equal value are identical, so the tie rule only
// matters for raw (unreduced) lists.
inline bool slope_before(const Slope& x, const Slope& y) {
    Int lhs = x.num * y.mult;
    Int rhs = y.num * x.mult;
    if (lhs != rhs) return lhs > rhs;
    return x.mult < y.mult;
}

inline bool is_normalized(const SeifertInvariant& m) {
    for (const auto& s : m.slopes) {
        if (s.mult < 2) return false;
        if (s.num <= 0 || s.num >= s.mult) return false;
    }
    for (std::size_t i = 1; i < m.slopes.size(); ++i)
        if (slope_before(m.slopes[i], m.slopes[i - 1])) return false;
    return true;
}

// Push every slope into (0, 1) by Euclidean reduction, absorb integer slopes
// into the Euler part, and sort. Preserves the Euler number exactly.
inline SeifertInvariant normalize(const SeifertInvariant& m) {
    SeifertInvariant out;
    out.euler_part = m.euler_part;
    out.orientation_reversed = m.orientation_reversed;
    out.slopes.reserve(m.slopes.size());
    for (const auto& s : m.slopes) {
        if (s.mult == 1) {
            out.euler_part += s.num; // integer slope, no exceptional fiber
            continue;
        }
        Int q = floor_div(s.num, s.mult);
        Int r = s.num - q * s.mult; // in (0, mult): r = 0 would force mult = 1
        out.euler_part += q;
        out.slopes.emplace_back(r, s.mult);
    }
    std::stable_sort(out.slopes.begin(), out.slopes.end(), slope_before);
    return out;
}

// The orientation involution: M(c; b_i/a_i) and the reversed-orientation
// space M(-n-c; (a_i-b_i)/a_i) present the same manifold with opposite
// orientation. Requires a normalized invariant; the result is normalized and
// the Euler number changes sign.
inline SeifertInvariant flip(const SeifertInvariant& m) {
    if (!is_normalized(m))
        fail(ErrorKind::InvalidInput, "flip requires a normalized invariant");
    SeifertInvariant out;
    out.euler_part = -Int(m.slopes.size()) - m.euler_part;
    out.orientation_reversed = !m.orientation_reversed;
    out.slopes.reserve(m.slopes.size());
    for (const auto& s : m.slopes) out.slopes.emplace_back(s.mult - s.num, s.mult);
    std::stable_sort(out.slopes.begin(), out.slopes.end(), slope_before);
    return out;
}

// Orientation representative used for deduplication: the one with e > 0.
// Inputs with e = 0 are already self-paired and are returned unchanged.
inline SeifertInvariant canonical_form(const SeifertInvariant& m) {
    SeifertInvariant n = normalize(m);
    if (euler_number(n).sign() < 0) return flip(n);
    return n;
}

inline std::string print_invariant(const SeifertInvariant& m) {
    std::string out = "(" + m.euler_part.str() + ";";
    for (std::size_t i = 0; i < m.slopes.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += m.slopes[i].num.str() + "/" + m.slopes[i].mult.str();
    }
    out += ")";
    return out;
}

// The same data in the tuple convention with leading -b0.
inline std::string print_tuple_form(const SeifertInvariant& m) {
    std::string out = "M(" + (-m.b0()).str();
    for (const auto& s : m.slopes) out += ", " + s.num.str() + "/" + s.mult.str();
    out += ")";
    return out;
}

namespace detail {

class InvariantParser {
public:
    explicit InvariantParser(std::string_view text) : text_(text) {}

    SeifertInvariant parse() {
        skip_space();
        expect('(');
        Int c = parse_int();
        skip_space();
        expect(';');
        std::vector<std::pair<Int, Int>> raw;
        skip_space();
        if (!at(')')) {
            for (;;) {
                Int b = parse_int();
                skip_space();
                expect('/');
                Int a = parse_unsigned();
                raw.emplace_back(std::move(b), std::move(a));
                skip_space();
                if (at(',')) {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect(')');
        skip_space();
        if (pos_ != text_.size())
            fail(ErrorKind::ParseError, trailing_msg());
        return make_invariant(std::move(c), std::move(raw));
    }

private:
    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (!at(c))
            fail(ErrorKind::ParseError,
                 "expected '" + std::string(1, c) + "' at position " + std::to_string(pos_));
        ++pos_;
    }

    Int parse_int() {
        skip_space();
        std::size_t start = pos_;
        if (at('+') || at('-')) ++pos_;
        return finish_number(start);
    }

    Int parse_unsigned() {
        skip_space();
        return finish_number(pos_);
    }

    Int finish_number(std::size_t start) {
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (digits == 0)
            fail(ErrorKind::ParseError, "expected a number at position " + std::to_string(pos_));
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    std::string trailing_msg() const {
        return "unexpected trailing input at position " + std::to_string(pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Accepts "(c; b1/a1, b2/a2, ...)" with arbitrary whitespace. The result is
// validated and normalized. Round trip: parse_invariant(print_invariant(M))
// equals M for every normalized M.
inline SeifertInvariant parse_invariant(std::string_view text) {
    return normalize(detail::InvariantParser(text).parse());
}

} // namespace seifert
