#include <doctest.h>

#include "gcodim/asymptotics.hpp"
#include "gcodim/codim.hpp"
#include "gcodim/error.hpp"

#include <mpfr.h>

#include <cmath>

using namespace gcodim;

namespace {

// Independent evaluation with MPFR's own pi.
double approx(const RadicalConstant& c) {
    mpfr_t a, b;
    mpfr_inits2(200, a, b, (mpfr_ptr)nullptr);
    mpfr_set_q(a, c.q().get_mpq_t(), MPFR_RNDN);
    mpfr_set_z(b, c.r().get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(b, b, MPFR_RNDN);
    mpfr_mul(a, a, b, MPFR_RNDN);
    mpfr_const_pi(b, MPFR_RNDN);
    mpfr_sqrt(b, b, MPFR_RNDN);
    mpfr_pow_si(b, b, c.pi_power(), MPFR_RNDN);
    mpfr_mul(a, a, b, MPFR_RNDN);
    double d = mpfr_get_d(a, MPFR_RNDN);
    mpfr_clears(a, b, (mpfr_ptr)nullptr);
    return d;
}

ElementaryGrading grading(const char* group, std::vector<Elem> v) {
    return ElementaryGrading::analyze(FiniteGroup::builtin(group), std::move(v));
}

const RadicalConstant inv_sqrt_pi(1, 1, -1);

} // namespace

TEST_CASE("radical constants") {
    RadicalConstant a(1, 8, 0);
    CHECK(a.q() == 2);
    CHECK(a.r() == 2);
    RadicalConstant b(Rational(3, 4), Rational(5, 12), 3);
    // sqrt(5/12) = sqrt(60)/12 = sqrt(15)/6
    CHECK(b.q() == Rational(1, 8));
    CHECK(b.r() == 15);
    CHECK(a * b == b * a);
    CHECK((a * b) * a == a * (b * a));
    CHECK(std::fabs(approx(a * b) - approx(a) * approx(b)) < 1e-12);
    CHECK(a / a == RadicalConstant());
    CHECK(RadicalConstant::pow(Rational(2), Rational(3, 2)) == RadicalConstant(2, 2, 0));
    CHECK(RadicalConstant::pow(Rational(2), Rational(-1, 2)) == RadicalConstant(Rational(1, 2), 2, 0));
    CHECK_THROWS_AS(RadicalConstant::pow(Rational(2), Rational(1, 3)), NotRepresentableError);
    CHECK(RadicalConstant(Rational(6561), 6, -5).str() == "6561*sqrt(6)*pi^(-5/2)");
}

TEST_CASE("float evaluation") {
    CHECK(eval_float(RadicalConstant(), 5) == "1.0000");
    CHECK(eval_float(inv_sqrt_pi, 12) == "0.564189583548");
    const RadicalConstant alpha(Rational(10077696, 64), Rational(1, 96), -5);
    CHECK(std::fabs(std::stod(eval_float(alpha, 30)) - approx(alpha)) < 1e-9);
    CHECK(eval_float(alpha, 6) == "918.694");
}

TEST_CASE("regev beta") {
    CHECK(regev_beta(1) == RadicalConstant());
    CHECK(regev_beta(2) == inv_sqrt_pi);
    // (2 pi)^-1 2^-4 2 3^(9/2) = 81 sqrt(3) / (16 pi)
    CHECK(regev_beta(3) == RadicalConstant(Rational(81, 16), 3, -2));
}

TEST_CASE("Beckner-Regev leading term") {
    auto k1 = beckner_regev_leading({1}, 2, {Rational(-3, 2)}, Rational(-3, 2));
    CHECK(k1.rho == Rational(-3, 2));
    CHECK(k1.coeff == RadicalConstant());

    auto half = beckner_regev_leading({Rational(1, 2), Rational(1, 2)}, 2, {0, 0}, 0);
    CHECK(half.rho == Rational(-1, 2));
    CHECK(half.coeff == inv_sqrt_pi);

    // sum_k [C(n,k) 2^-n]^2 = C(2n,n) 4^-n against coeff * n^-1/2 at n = 2000
    const int n = 2000;
    mpfr_t s, t;
    mpfr_inits2(256, s, t, (mpfr_ptr)nullptr);
    Rational exact(binomial(2 * n, n), ipow(4, n));
    mpfr_set_q(s, exact.get_mpq_t(), MPFR_RNDN);
    mpfr_set_d(t, approx(half.coeff) / std::sqrt(double(n)), MPFR_RNDN);
    mpfr_div(s, s, t, MPFR_RNDN);
    CHECK(std::fabs(mpfr_get_d(s, MPFR_RNDN) - 1) < 1e-3);
    mpfr_clears(s, t, (mpfr_ptr)nullptr);
}

TEST_CASE("elementary asymptotic forms") {
    auto triv = grading("1", {0, 0});
    auto f = elementary_asymptotics(triv, Target::TSequence, AlphaMode::Derived);
    CHECK(*f.constant == inv_sqrt_pi);
    CHECK(f.b == Rational(-3, 2));
    CHECK(f.d == 4);
    auto fp = elementary_asymptotics(triv, Target::TSequence, AlphaMode::Printed);
    CHECK(*fp.constant == RadicalConstant(1, Rational(1, 2), -1));

    auto z2 = grading("C2", {0, 1});
    for (auto mode : {AlphaMode::Derived, AlphaMode::Printed}) {
        auto g = elementary_asymptotics(z2, Target::TSequence, mode);
        CHECK(*g.constant == RadicalConstant(Rational(1, 2), 1, -1));
        CHECK(g.b == Rational(-1, 2));
        CHECK(g.d == 4);
        auto c = elementary_asymptotics(z2, Target::CSequence, mode);
        CHECK(*c.constant == RadicalConstant(2, 1, -1));
    }

    // k = 1 derived constant is beta_m
    auto m3 = grading("1", {0, 0, 0});
    CHECK(*elementary_asymptotics(m3, Target::TSequence, AlphaMode::Derived).constant ==
          regev_beta(3));

    // all multiplicities one: modes coincide
    auto c3 = grading("C3", {0, 1, 2});
    CHECK(*elementary_asymptotics(c3, Target::TSequence, AlphaMode::Derived).constant ==
          *elementary_asymptotics(c3, Target::TSequence, AlphaMode::Printed).constant);

    auto d3 = FiniteGroup::dihedral(3);
    std::vector<Elem> v;
    for (const char* l : {"e", "e", "e", "s", "s", "r"})
        v.push_back(*d3.find(l));
    auto a = elementary_asymptotics(ElementaryGrading::analyze(d3, v), Target::CSequence,
                                    AlphaMode::Printed);
    CHECK(*a.constant == RadicalConstant(Rational(10077696, 64), Rational(1, 96), -5));
    CHECK(a.b == Rational(-13, 2));
    CHECK(a.d == 36);
}

TEST_CASE("fine and G-simple shapes") {
    auto f = fine_asymptotics(FiniteGroup::cyclic(5));
    CHECK(*f.constant == RadicalConstant());
    CHECK(f.b == 0);
    CHECK(f.d == 5);
    auto s3 = fine_asymptotics(FiniteGroup::symmetric(3));
    CHECK(*s3.constant == RadicalConstant::rational(3));
    CHECK(s3.d == 6);
    auto q8 = fine_asymptotics(FiniteGroup::quaternion8());
    CHECK(*q8.constant == RadicalConstant::rational(2));
    CHECK(q8.d == 8);

    auto d3 = FiniteGroup::dihedral(3);
    auto r = generated_subgroup(d3, {*d3.find("r")});
    auto s = GSimpleStructure::make(d3, r, std::nullopt, {0, *d3.find("s")});
    auto g = gsimple_shape(s);
    CHECK_FALSE(g.constant);
    CHECK(g.b == Rational(-1, 2));
    CHECK(g.d == 12);

    auto full = gsimple_shape(GSimpleStructure::make(d3, whole_group(d3), std::nullopt, {0}));
    CHECK(full.b == 0);
    CHECK(full.d == 6);

    auto e = ElementaryGrading::analyze(d3, {0, 0, 3});
    auto ef = elementary_asymptotics(e, Target::CSequence, AlphaMode::Derived);
    auto es = gsimple_shape(GSimpleStructure::from_elementary(e));
    CHECK(ef.b == es.b);
    CHECK(ef.d == es.d);
}

TEST_CASE("convergence diagnostics") {
    auto triv = grading("1", {0, 0});
    auto d = convergence_report(triv, Target::TSequence, AlphaMode::Derived, {250, 500});
    CHECK(std::fabs(d.rows.back().ratio_value - 1) < 1e-2);
    CHECK_FALSE(d.divergent_from_one);
    auto p = convergence_report(triv, Target::TSequence, AlphaMode::Printed, {250, 500});
    CHECK(std::fabs(p.rows.back().ratio_value - std::sqrt(2.0)) < 1e-2);
    CHECK(p.divergent_from_one);

    auto z2 = grading("C2", {0, 1});
    auto z = convergence_report(z2, Target::TSequence, AlphaMode::Printed, {1000});
    CHECK(std::fabs(z.rows[0].ratio_value - 1) < 1e-3);
    CHECK(z.rows[0].exact == binomial(2000, 1000) / 2);
    CHECK_THROWS_AS(convergence_report(z2, Target::CSequence, AlphaMode::Derived, {10}), Error);
}
