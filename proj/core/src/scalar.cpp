#include "qswap/scalar.hpp"

#include <cmath>
#include <sstream>

namespace qswap {

namespace {

using boost::multiprecision::cpp_int;

int rational_sign(const Rational& r) {
    if (r == 0) return 0;
    return r > 0 ? 1 : -1;
}

// Exact rational square root, if the argument is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    cpp_int num = numerator(r), den = denominator(r);
    cpp_int sn = boost::multiprecision::sqrt(num);
    cpp_int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace

int Scalar::sign() const {
    int sr = rational_sign(rat_), si = rational_sign(irr_);
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Opposite signs: compare rat^2 against 2*irr^2 (equality impossible).
    bool rat_dominates = rat_ * rat_ > 2 * irr_ * irr_;
    return rat_dominates ? sr : si;
}

std::optional<Scalar> Scalar::sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Scalar(0);
    auto candidate = [this](const Scalar& c) -> std::optional<Scalar> {
        if (c * c == *this) return c.sign() >= 0 ? c : -c;
        return std::nullopt;
    };
    if (irr_ == 0) {
        if (auto x = rational_sqrt(rat_)) return candidate(Scalar(*x));
        if (auto y = rational_sqrt(rat_ / 2)) return candidate(Scalar(Rational(0), *y));
        return std::nullopt;
    }
    // (x + y*sqrt2)^2 = x^2 + 2y^2 + 2xy*sqrt2: x^2 solves 2t^2 - 2*rat*t + irr^2 = 0.
    auto disc = rational_sqrt(rat_ * rat_ - 2 * irr_ * irr_);
    if (!disc) return std::nullopt;
    for (int branch : {1, -1}) {
        Rational t = (rat_ + branch * *disc) / 2;
        if (auto x = rational_sqrt(t)) {
            if (*x == 0) continue;
            if (auto root = candidate(Scalar(*x, irr_ / (2 * *x)))) return root;
        }
    }
    return std::nullopt;
}

double Scalar::to_double() const {
    return rat_.convert_to<double>() + irr_.convert_to<double>() * std::sqrt(2.0);
}

std::string Scalar::to_string() const {
    std::ostringstream out;
    auto print_rat = [&out](const Rational& r) {
        out << numerator(r);
        if (denominator(r) != 1) out << '/' << denominator(r);
    };
    if (irr_ == 0) {
        print_rat(rat_);
        return out.str();
    }
    if (rat_ != 0) {
        print_rat(rat_);
        if (irr_ > 0) out << '+';
    }
    print_rat(irr_);
    out << "*sqrt2";
    return out.str();
}

}  // namespace qswap
