#pragma once

#include "gcodim/radical.hpp"

#include <mpfr.h>

#include <string>

namespace gcodim::detail {

inline constexpr const char* pi_literal =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

struct Mpfr {
    mpfr_t x;
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    ~Mpfr() { mpfr_clear(x); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

inline void set_pi(mpfr_t out) { mpfr_set_str(out, pi_literal, 10, MPFR_RNDN); }

inline void radical_to_mpfr(const RadicalConstant& c, mpfr_t out, mpfr_prec_t prec) {
    Mpfr t(prec), sp(prec);
    mpfr_set_q(out, c.q().get_mpq_t(), MPFR_RNDN);
    if (c.r() != 1) {
        mpfr_set_z(t.x, c.r().get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt(t.x, t.x, MPFR_RNDN);
        mpfr_mul(out, out, t.x, MPFR_RNDN);
    }
    if (c.pi_power() != 0) {
        set_pi(sp.x);
        mpfr_sqrt(sp.x, sp.x, MPFR_RNDN);
        mpfr_pow_si(sp.x, sp.x, c.pi_power(), MPFR_RNDN);
        mpfr_mul(out, out, sp.x, MPFR_RNDN);
    }
}

/// Fixed notation with `digits` significant digits.
inline std::string format_sig(const mpfr_t v, int digits) {
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    if (mpfr_zero_p(v))
        e = 1;
    const long ex = static_cast<long>(e);
    const long nd = static_cast<long>(m.size());
    std::string out;
    if (ex <= 0)
        out = "0." + std::string(static_cast<std::size_t>(-ex), '0') + m;
    else if (ex >= nd)
        out = m + std::string(static_cast<std::size_t>(ex - nd), '0');
    else
        out = m.substr(0, static_cast<std::size_t>(ex)) + "." + m.substr(static_cast<std::size_t>(ex));
    return sign + out;
}

} // namespace gcodim::detail
