#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>
#include <utility>

namespace tripts {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Number of the form a + b*sqrt(3) with arbitrary-precision rational a, b.
/// Closed under +, -, * and division by a nonzero rational. Every predicate
/// in the library reduces to the exact sign of such a number.
class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0) {}
    ExactScalar(Rational a) : a_(std::move(a)), b_(0) {}
    ExactScalar(long a) : a_(a), b_(0) {}
    ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static ExactScalar sqrt3() { return ExactScalar(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& root3_part() const { return b_; }

    /// Exact sign of a + b*sqrt(3): when a and b disagree in sign the
    /// comparison reduces to a^2 vs 3*b^2 (sqrt(3) is irrational, so the
    /// squares can only be equal when a = b = 0).
    int sign() const {
        int sa = sgn(a_);
        int sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        int sq = cmp(a_ * a_, 3 * b_ * b_); // |a| vs |b|*sqrt(3)
        return sq == 0 ? 0 : (sq > 0 ? sa : sb);
    }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    ExactScalar operator-() const { return ExactScalar(-a_, -b_); }

    ExactScalar& operator+=(const ExactScalar& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        // (a + b*s)(c + d*s) = (ac + 3bd) + (ad + bc)*s  with s = sqrt(3)
        Rational a = a_ * o.a_ + 3 * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    ExactScalar& operator/=(const Rational& r) {
        assert(sgn(r) != 0);
        a_ /= r;
        b_ /= r;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar l, const ExactScalar& r) { return l += r; }
    friend ExactScalar operator-(ExactScalar l, const ExactScalar& r) { return l -= r; }
    friend ExactScalar operator*(ExactScalar l, const ExactScalar& r) { return l *= r; }
    friend ExactScalar operator/(ExactScalar l, const Rational& r) { return l /= r; }

    // Equality is canonical: a + b*sqrt(3) determines (a, b) uniquely.
    friend bool operator==(const ExactScalar& l, const ExactScalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend bool operator!=(const ExactScalar& l, const ExactScalar& r) { return !(l == r); }
    friend bool operator<(const ExactScalar& l, const ExactScalar& r) {
        return (l - r).sign() < 0;
    }
    friend bool operator>(const ExactScalar& l, const ExactScalar& r) {
        return (l - r).sign() > 0;
    }
    friend bool operator<=(const ExactScalar& l, const ExactScalar& r) {
        return (l - r).sign() <= 0;
    }
    friend bool operator>=(const ExactScalar& l, const ExactScalar& r) {
        return (l - r).sign() >= 0;
    }

    double to_double() const { return a_.get_d() + b_.get_d() * 1.7320508075688772; }

    std::string str() const {
        std::string s = a_.get_str();
        if (sgn(b_) != 0) {
            s += (sgn(b_) > 0 ? "+" : "") + b_.get_str() + "*sqrt(3)";
        }
        return s;
    }

private:
    Rational a_;
    Rational b_;
};

inline int scalar_sign(const ExactScalar& s) { return s.sign(); }

inline const ExactScalar& min(const ExactScalar& l, const ExactScalar& r) {
    return r < l ? r : l;
}
inline const ExactScalar& max(const ExactScalar& l, const ExactScalar& r) {
    return l < r ? r : l;
}

} // namespace tripts
