#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gcodim {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt multinomial(const std::vector<int>& parts) {
    BigInt r = 1;
    unsigned long acc = 0;
    for (int p : parts) {
        acc += static_cast<unsigned long>(p);
        r *= binomial(acc, static_cast<unsigned long>(p));
    }
    return r;
}

inline BigInt ipow(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "p/q" or "p"; canonicalized.
inline std::string to_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_str();
}

/// Accepts "a", "-a", "a/b"; throws std::invalid_argument.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace gcodim
