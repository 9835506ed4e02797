#pragma once

#include "gcodim/numeric.hpp"

#include <string>

namespace gcodim {

/// Exact value q * sqrt(r) * pi^(p/2) with r a squarefree positive integer.
class RadicalConstant {
public:
    RadicalConstant() : q_(1), r_(1), p_(0) {}
    /// r may be any positive rational; the result is canonicalized.
    RadicalConstant(const Rational& q, const Rational& r, int pi_pow);

    static RadicalConstant rational(const Rational& q) { return {q, 1, 0}; }
    /// base^e for e with denominator 1 or 2; NotRepresentable otherwise.
    static RadicalConstant pow(const Rational& base, const Rational& e);
    /// pi^e, needs 2e integral.
    static RadicalConstant pi_pow(const Rational& e);

    const Rational& q() const { return q_; }
    const BigInt& r() const { return r_; }
    int pi_power() const { return p_; }

    RadicalConstant operator*(const RadicalConstant& o) const;
    RadicalConstant& operator*=(const RadicalConstant& o) { return *this = *this * o; }
    RadicalConstant inverse() const;
    RadicalConstant operator/(const RadicalConstant& o) const { return *this * o.inverse(); }
    RadicalConstant pow_int(long k) const;
    /// Structural equality of canonical forms.
    bool operator==(const RadicalConstant& o) const {
        return q_ == o.q_ && r_ == o.r_ && p_ == o.p_;
    }
    bool operator!=(const RadicalConstant& o) const { return !(*this == o); }

    /// e.g. "6561*sqrt(6)*pi^(-5/2)"
    std::string str() const;
    double to_double() const;

private:
    Rational q_;
    BigInt r_;
    int p_;
};

/// Squarefree part s and square root of the square part t: n = t^2 * s.
void squarefree_split(const BigInt& n, BigInt& s, BigInt& t);

/// Correctly rounded decimal with the given number of significant digits (<= 50).
std::string eval_float(const RadicalConstant& c, int digits);

} // namespace gcodim
