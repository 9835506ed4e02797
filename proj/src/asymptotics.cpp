#include "gcodim/asymptotics.hpp"

#include "gcodim/codim.hpp"
#include "gcodim/error.hpp"
#include "mpfr_util.hpp"

#include <cmath>
#include <numeric>

namespace gcodim {

namespace {

/// (2 pi)^e
RadicalConstant two_pi_pow(const Rational& e) {
    return RadicalConstant::pow(2, e) * RadicalConstant::pi_pow(e);
}

BigInt superfactorial(int s) {
    BigInt r = 1;
    for (int i = 1; i < s; ++i)
        r *= factorial(static_cast<unsigned long>(i));
    return r;
}

} // namespace

RadicalConstant regev_beta(int s) {
    if (s < 1)
        throw Error(Errc::BadParameter, "regev_beta needs s >= 1");
    const Rational s2(static_cast<long>(s) * s);
    return two_pi_pow(Rational(-(s - 1), 2)) * RadicalConstant::pow(Rational(1, 2), (s2 - 1) / 2) *
           RadicalConstant::rational(Rational(superfactorial(s))) *
           RadicalConstant::pow(Rational(s), s2 / 2);
}

BecknerRegev beckner_regev_leading(const std::vector<Rational>& p, const Rational& beta,
                                   const std::vector<Rational>& e, const Rational& d) {
    const int k = static_cast<int>(p.size());
    if (k == 0 || e.size() != p.size())
        throw Error(Errc::SizeMismatch, "p and exponent vectors must be nonempty and equal length");
    Rational sum = 0;
    for (const auto& x : p) {
        if (x <= 0)
            throw Error(Errc::BadParameter, "p entries must be positive");
        sum += x;
    }
    if (sum != 1)
        throw Error(Errc::BadParameter, "p must sum to 1");
    if (beta <= 0)
        throw Error(Errc::BadParameter, "beta must be positive");
    const Rational km1(k - 1);
    Rational rho = d - (beta - 1) * km1 / 2;
    rho.canonicalize();
    try {
        RadicalConstant c = RadicalConstant::pow(beta, -km1 / 2) *
                            two_pi_pow(-(beta - 1) * km1 / 2);
        Rational prod = 1;
        for (int i = 0; i < k; ++i) {
            c *= RadicalConstant::pow(p[i], e[i]);
            prod *= p[i];
        }
        c *= RadicalConstant::pow(prod, (1 - beta) / 2);
        return {rho, c};
    } catch (const NotRepresentableError&) {
        double v = std::pow(beta.get_d(), -km1.get_d() / 2) *
                   std::pow(2 * M_PI, -(beta.get_d() - 1) * km1.get_d() / 2);
        double prod = 1;
        for (int i = 0; i < k; ++i) {
            v *= std::pow(p[i].get_d(), e[i].get_d());
            prod *= p[i].get_d();
        }
        v *= std::pow(prod, (1 - beta.get_d()) / 2);
        throw NotRepresentableError("coefficient leaves the radical form", v);
    }
}

AsymptoticForm elementary_asymptotics(const ElementaryGrading& gr, Target target, AlphaMode mode) {
    const long m = gr.m();
    const long ss = gr.sum_squares();
    AsymptoticForm f;
    f.b = Rational(1 - ss, 2);
    f.b.canonicalize();
    f.d = BigInt(m * m);
    const Rational inv_hg(1, static_cast<long>(gr.H_g().size()));
    RadicalConstant alpha;
    if (mode == AlphaMode::Derived) {
        std::vector<Rational> p, e;
        Rational d = 0;
        for (int mi : gr.mults()) {
            p.emplace_back(mi, m);
            p.back().canonicalize();
            e.emplace_back(1 - mi * mi, 2);
            e.back().canonicalize();
            d += e.back();
        }
        alpha = RadicalConstant::rational(inv_hg) * beckner_regev_leading(p, 2, e, d).coeff;
        for (int mi : gr.mults())
            alpha *= regev_beta(mi);
    } else {
        alpha = RadicalConstant::rational(inv_hg) * RadicalConstant::pow(Rational(m), Rational(ss, 2)) *
                two_pi_pow(Rational(-(m - 1), 2)) *
                RadicalConstant::pow(Rational(1, 2), Rational(ss - 1, 2));
        for (int mi : gr.mults())
            alpha *= RadicalConstant::rational(Rational(superfactorial(mi))) *
                     RadicalConstant::pow(Rational(mi), Rational(-1, 2));
    }
    if (target == Target::CSequence)
        alpha *= RadicalConstant::rational(Rational(m * m));
    f.constant = alpha;
    return f;
}

AsymptoticForm fine_asymptotics(const FiniteGroup& h) {
    AsymptoticForm f;
    f.constant = RadicalConstant::rational(Rational(static_cast<long>(commutator_subgroup(h).size())));
    f.b = 0;
    f.d = BigInt(h.order());
    return f;
}

AsymptoticForm gsimple_shape(const GSimpleStructure& s) {
    AsymptoticForm f;
    long ss = 0;
    for (int mi : s.mults())
        ss += static_cast<long>(mi) * mi;
    f.b = Rational(1 - ss, 2);
    f.b.canonicalize();
    f.d = BigInt(s.dim_A());
    return f;
}

ConvergenceReport convergence_report(const ElementaryGrading& gr, Target target, AlphaMode mode,
                                     const std::vector<int>& ns) {
    if (target != Target::TSequence)
        throw Error(Errc::UnsupportedStructure, "convergence is reported for the t-sequence only");
    const AsymptoticForm f = elementary_asymptotics(gr, target, mode);
    const mpfr_prec_t prec = 256;
    ConvergenceReport rep;
    detail::Mpfr alpha(prec), nb(prec), dn(prec), ex(prec), asym(prec), ratio(prec), bq(prec);
    detail::radical_to_mpfr(*f.constant, alpha.x, prec);
    for (int n : ns) {
        if (n < 1)
            throw Error(Errc::BadParameter, "convergence needs n >= 1");
        ConvergenceRow row;
        row.n = n;
        row.exact = t_graded(gr, n);
        mpfr_set_q(bq.x, f.b.get_mpq_t(), MPFR_RNDN);
        mpfr_set_si(nb.x, n, MPFR_RNDN);
        mpfr_pow(nb.x, nb.x, bq.x, MPFR_RNDN);
        mpfr_set_z(dn.x, f.d.get_mpz_t(), MPFR_RNDN);
        mpfr_pow_ui(dn.x, dn.x, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_mul(asym.x, alpha.x, nb.x, MPFR_RNDN);
        mpfr_mul(asym.x, asym.x, dn.x, MPFR_RNDN);
        mpfr_set_z(ex.x, row.exact.get_mpz_t(), MPFR_RNDN);
        mpfr_div(ratio.x, ex.x, asym.x, MPFR_RNDN);
        row.ratio = detail::format_sig(ratio.x, 20);
        row.asymptotic = detail::format_sig(asym.x, 20);
        row.ratio_value = mpfr_get_d(ratio.x, MPFR_RNDN);
        rep.rows.push_back(std::move(row));
    }
    const auto& r = rep.rows;
    for (std::size_t i = 2; i < r.size(); ++i) {
        double a = r[i - 1].ratio_value - r[i - 2].ratio_value;
        double b = r[i].ratio_value - r[i - 1].ratio_value;
        if ((a > 0 && b < 0) || (a < 0 && b > 0))
            rep.monotone = false;
    }
    if (r.size() >= 2 && r.back().n != r[r.size() - 2].n) {
        // Richardson step assuming ratio = L + c/n
        const auto& x = r[r.size() - 2];
        const auto& y = r.back();
        rep.limit_estimate = (y.n * y.ratio_value - x.n * x.ratio_value) / (y.n - x.n);
        rep.divergent_from_one = std::fabs(rep.limit_estimate - 1) > 1e-2;
    } else if (!r.empty()) {
        rep.limit_estimate = r.back().ratio_value;
        rep.divergent_from_one = std::fabs(rep.limit_estimate - 1) > 0.05;
    }
    return rep;
}

} // namespace gcodim
