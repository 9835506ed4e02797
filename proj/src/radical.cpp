#include "gcodim/radical.hpp"

#include "gcodim/error.hpp"
#include "mpfr_util.hpp"

#include <cmath>

namespace gcodim {

void squarefree_split(const BigInt& n, BigInt& s, BigInt& t) {
    if (n <= 0)
        throw Error(Errc::BadParameter, "squarefree_split needs a positive integer");
    BigInt rest = n;
    s = 1;
    t = 1;
    for (unsigned long p = 2; p <= 1000000; ++p) {
        if (BigInt(p) * p > rest)
            break;
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) {
            t *= ipow(BigInt(p), static_cast<unsigned long>(e / 2));
            if (e % 2)
                s *= p;
        }
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            BigInt root;
            mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
            t *= root;
        } else {
            s *= rest;
        }
    }
}

RadicalConstant::RadicalConstant(const Rational& q, const Rational& r, int pi_pow)
    : q_(q), r_(1), p_(pi_pow) {
    q_.canonicalize();
    if (r <= 0)
        throw Error(Errc::BadParameter, "radicand must be positive");
    if (q_ == 0) {
        p_ = 0;
        return;
    }
    // sqrt(a/b) = sqrt(a*b)/b, then pull squares out of a*b
    Rational rr = r;
    rr.canonicalize();
    BigInt ab = rr.get_num() * rr.get_den();
    BigInt s, t;
    squarefree_split(ab, s, t);
    q_ *= Rational(t, rr.get_den());
    q_.canonicalize();
    r_ = s;
}

RadicalConstant RadicalConstant::pow(const Rational& base, const Rational& e) {
    Rational ee = e;
    ee.canonicalize();
    const BigInt& den = ee.get_den();
    if (den != 1 && den != 2)
        throw NotRepresentableError("exponent " + to_string(ee) + " is not a half-integer",
                                    std::pow(base.get_d(), ee.get_d()));
    if (base == 0) {
        if (ee <= 0)
            throw Error(Errc::BadParameter, "0 to a nonpositive power");
        return {0, 1, 0};
    }
    const BigInt& num = ee.get_num();
    if (!num.fits_slong_p())
        throw Error(Errc::BadParameter, "exponent too large");
    long a = num.get_si();
    Rational b = base;
    if (a < 0) {
        b = 1 / b;
        a = -a;
    }
    Rational v;
    mpz_pow_ui(v.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(a));
    mpz_pow_ui(v.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(a));
    v.canonicalize();
    if (den == 1)
        return {v, 1, 0};
    if (v < 0)
        throw NotRepresentableError("square root of a negative number", std::nan(""));
    return {1, v, 0};
}

RadicalConstant RadicalConstant::pi_pow(const Rational& e) {
    Rational twice = e * 2;
    twice.canonicalize();
    if (twice.get_den() != 1 || !twice.get_num().fits_sint_p())
        throw NotRepresentableError("pi exponent " + to_string(e) + " is not a half-integer",
                                    std::pow(M_PI, e.get_d()));
    return {1, 1, static_cast<int>(twice.get_num().get_si())};
}

RadicalConstant RadicalConstant::operator*(const RadicalConstant& o) const {
    return RadicalConstant(q_ * o.q_, Rational(r_ * o.r_), p_ + o.p_);
}

RadicalConstant RadicalConstant::inverse() const {
    if (q_ == 0)
        throw Error(Errc::BadParameter, "inverse of zero");
    // 1/(q sqrt r) = sqrt(r) / (q r)
    return RadicalConstant(1 / (q_ * Rational(r_)), Rational(r_), -p_);
}

RadicalConstant RadicalConstant::pow_int(long k) const {
    RadicalConstant base = k < 0 ? inverse() : *this;
    RadicalConstant out;
    for (long i = 0; i < (k < 0 ? -k : k); ++i)
        out *= base;
    return out;
}

std::string RadicalConstant::str() const {
    std::string s = to_string(q_);
    if (r_ != 1)
        s += "*sqrt(" + r_.get_str() + ")";
    if (p_ != 0) {
        if (p_ % 2 == 0)
            s += "*pi^(" + std::to_string(p_ / 2) + ")";
        else
            s += "*pi^(" + std::to_string(p_) + "/2)";
    }
    return s;
}

double RadicalConstant::to_double() const {
    return std::stod(eval_float(*this, 20));
}

std::string eval_float(const RadicalConstant& c, int digits) {
    if (digits < 1 || digits > 50)
        throw Error(Errc::BadParameter, "digits must be in [1, 50]");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>((digits + 16) * 3.33) + 16;
    detail::Mpfr v(prec);
    detail::radical_to_mpfr(c, v.x, prec);
    return detail::format_sig(v.x, digits);
}

} // namespace gcodim
