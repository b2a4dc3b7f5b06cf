#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Every quantity in this library is an exact fraction; nothing here touches
 * floating point. Values are kept canonical at all times: the denominator is
 * positive and shares no factor with the numerator.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace seifert {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floored quotient: the largest q with q*b <= a when b > 0, smallest when
// b < 0. cpp_int's operator/ truncates toward zero instead.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// a - floor_div(a, b) * b; shares the sign of b, so in [0, b) for b > 0.
inline Int floor_mod(const Int& a, const Int& b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}

    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { canonicalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("reciprocal of zero");
        return Rational(den_, num_);
    }

    // Largest integer <= value.
    Int floor() const { return floor_div(num_, den_); }
    // Smallest integer >= value.
    Int ceil() const { return -floor_div(-num_, den_); }
    // value - floor(value), in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    // Always "p/q", including integers ("3/1"), so output is uniform.
    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct unchecked {};
    Rational(unchecked, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void canonicalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd(abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

// The largest integer strictly below x: x - 1 for integral x, floor(x) else.
inline Int strict_floor(const Rational& x) {
    return x.is_integer() ? Int(x.num() - 1) : x.floor();
}

// The unique integer in the half-open interval [x - 1, x), i.e. ceil(x) - 1.
inline Int below_half_open(const Rational& x) {
    return x.ceil() - 1;
}

} // namespace seifert
