#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace qswap {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of the field Q(sqrt(2)): value = rat + irr * sqrt(2).
///
/// Every amplitude appearing in the simulated protocols (beam-splitter
/// factors 1/sqrt(2), Bell normalizations, post-selection weights) lives in
/// this field, so all arithmetic is exact and equality is decidable.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long v) : rat_(v) {}
    Scalar(Rational rat) : rat_(std::move(rat)) {}
    Scalar(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

    static Scalar rational(long num, long den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        return Scalar(Rational(num, den));
    }
    /// c * sqrt(2)^k for k in {0,1}; sqrt2(1, 2) is the ubiquitous 1/sqrt(2).
    static Scalar sqrt2(long num = 1, long den = 1) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        return Scalar(Rational(0), Rational(num, den));
    }

    const Rational& rat_part() const { return rat_; }
    const Rational& sqrt2_part() const { return irr_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_rational() const { return irr_ == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.rat_ + b.rat_, a.irr_ + b.irr_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.rat_ - b.rat_, a.irr_ - b.irr_);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.rat_, -a.irr_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        // (a0 + a1 s)(b0 + b1 s) = a0 b0 + 2 a1 b1 + (a0 b1 + a1 b0) s
        return Scalar(a.rat_ * b.rat_ + 2 * a.irr_ * b.irr_,
                      a.rat_ * b.irr_ + a.irr_ * b.rat_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Multiplicative inverse, by rationalizing with the conjugate rat - irr*sqrt(2).
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        Rational norm = rat_ * rat_ - 2 * irr_ * irr_;  // nonzero: sqrt(2) irrational
        return Scalar(rat_ / norm, -irr_ / norm);
    }

    /// a*a; all protocol amplitudes are real, so this is |a|^2.
    Scalar abs_square() const { return *this * *this; }

    /// Sign of the real value rat + irr*sqrt(2): -1, 0 or +1.
    int sign() const;

    /// Exact square root if it exists within Q(sqrt(2)).
    std::optional<Scalar> sqrt() const;

    double to_double() const;

    /// "p/q" for rational values, "p/q+r/s*sqrt2" otherwise.
    std::string to_string() const;

    friend bool operator==(const Scalar&, const Scalar&) = default;
    /// Lexicographic order on (rat, irr); used only as a canonical key order.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
        return a.irr_ < b.irr_;
    }

  private:
    Rational rat_{0};
    Rational irr_{0};
};

}  // namespace qswap
