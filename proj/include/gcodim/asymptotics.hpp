#pragma once

#include "gcodim/grading.hpp"
#include "gcodim/radical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcodim {

/// a_n ~ constant * n^b * d^n; constant empty when only the shape is known.
struct AsymptoticForm {
    std::optional<RadicalConstant> constant;
    Rational b;
    BigInt d;
};

enum class Target { TSequence, CSequence };
enum class AlphaMode { Derived, Printed };

RadicalConstant regev_beta(int s);

struct BecknerRegev {
    Rational rho;
    RadicalConstant coeff;
};

/// Leading term of sum over n_1+..+n_k = n of (multinomial * prod p_i^n_i)^beta * F(n_1..n_k)
/// with F(x) = prod x_i^e_i homogeneous of degree d.
BecknerRegev beckner_regev_leading(const std::vector<Rational>& p, const Rational& beta,
                                   const std::vector<Rational>& e, const Rational& d);

AsymptoticForm elementary_asymptotics(const ElementaryGrading& gr, Target target, AlphaMode mode);
AsymptoticForm fine_asymptotics(const FiniteGroup& h);
AsymptoticForm gsimple_shape(const GSimpleStructure& s);

struct ConvergenceRow {
    int n;
    BigInt exact;
    std::string asymptotic;  // 20 significant digits
    std::string ratio;       // 20 significant digits
    double ratio_value;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    bool monotone = true;
    bool divergent_from_one = false;
    double limit_estimate = 0;
};

/// exact t_n / (alpha n^b d^n) in extended precision; t-sequence only.
ConvergenceReport convergence_report(const ElementaryGrading& gr, Target target, AlphaMode mode,
                                     const std::vector<int>& ns);

} // namespace gcodim
