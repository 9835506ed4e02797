#include "gcodim/app.hpp"

#include "gcodim/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gcodim::app {

namespace {

GSimpleStructure as_gsimple(const Structure& s) {
    if (const auto* e = std::get_if<ElementaryGrading>(&s))
        return GSimpleStructure::from_elementary(*e);
    if (const auto* f = std::get_if<FineGrading>(&s))
        return GSimpleStructure::from_fine(*f);
    return std::get<GSimpleStructure>(s);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

json asym_json(const NamedStructure& ns, const AsymRequest& req) {
    AsymptoticForm f;
    std::optional<double> fallback;
    if (const auto* e = std::get_if<ElementaryGrading>(&ns.s)) {
        try {
            f = elementary_asymptotics(*e, req.target, req.mode);
        } catch (const NotRepresentableError& err) {
            fallback = err.approximation();
            const Rational ss = e->sum_squares();
            f.b = (1 - ss) / 2;
            f.d = BigInt(e->m()) * e->m();
        }
    } else if (const auto* fg = std::get_if<FineGrading>(&ns.s)) {
        const FiniteGroup h = fg->subgroup().as_group();
        f = fine_asymptotics(h);
        if (req.target == Target::TSequence)
            *f.constant = *f.constant / RadicalConstant::rational(Rational(h.order()));
    } else {
        f = gsimple_shape(std::get<GSimpleStructure>(ns.s));
    }
    json out;
    out["structure"] = ns.id;
    out["target"] = req.target == Target::TSequence ? "t" : "c";
    out["mode"] = req.mode == AlphaMode::Derived ? "derived" : "printed";
    if (f.constant) {
        out["constant_exact"] = radical_json(*f.constant);
        out["constant_str"] = f.constant->str();
        out["constant_float"] = eval_float(*f.constant, req.digits);
    } else {
        out["constant_exact"] = nullptr;
        out["constant_float"] = fallback ? json(fmt_double(*fallback)) : json(nullptr);
        out["constant_note"] = fallback ? "not representable as q*sqrt(r)*pi^(p/2)"
                                        : "constant not determined for this structure";
    }
    out["b"] = to_string(f.b);
    out["d"] = f.d.get_si();
    return out;
}

std::string codim_output(const NamedStructure& ns, const CodimRequest& req) {
    if (req.n_lo < 0 || req.n_hi < req.n_lo)
        throw Error(Errc::BadParameter, "bad n range");
    std::vector<std::pair<int, BigInt>> vals;
    std::string tag;
    const char* kind = "exact";
    if (req.kind == CodimKind::Exact) {
        const auto S = as_gsimple(ns.s);
        for (int n = req.n_lo; n <= req.n_hi; ++n)
            vals.emplace_back(n, codim_bruteforce(S, n, req.caps));
    } else if (req.kind == CodimKind::Proxy) {
        kind = "proxy";
        for (int n = req.n_lo; n <= req.n_hi; ++n) {
            auto tv = codim_proxy(ns.s, n);
            tag = tv.tag;
            vals.emplace_back(n, tv.value);
        }
    } else {
        kind = "t";
        for (int n = req.n_lo; n <= req.n_hi; ++n) {
            if (const auto* e = std::get_if<ElementaryGrading>(&ns.s))
                vals.emplace_back(n, t_graded(*e, n));
            else if (const auto* f = std::get_if<FineGrading>(&ns.s))
                vals.emplace_back(n, n == 0 ? BigInt(1)
                                            : fine_invariant_count(f->subgroup().as_group(), n));
            else
                throw Error(Errc::UnsupportedStructure,
                            "t-sequence is defined for elementary and fine gradings");
        }
    }
    if (req.csv) {
        std::ostringstream os;
        if (!tag.empty())
            os << "# " << tag << "\n";
        os << "n,value\n";
        for (const auto& [n, v] : vals)
            os << n << "," << v.get_str() << "\n";
        return os.str();
    }
    json arr = json::array();
    for (const auto& [n, v] : vals)
        arr.push_back({{"n", n}, {"value", v.get_str()}});
    json out{{"structure", ns.id}, {"kind", kind}, {"values", arr}};
    if (!tag.empty())
        out["tag"] = tag;
    return out.dump(2) + "\n";
}

std::string converge_csv(const NamedStructure& ns, AlphaMode mode, const std::vector<int>& list) {
    const auto* e = std::get_if<ElementaryGrading>(&ns.s);
    if (!e)
        throw Error(Errc::UnsupportedStructure, "convergence needs an elementary grading");
    const auto rep = convergence_report(*e, Target::TSequence, mode, list);
    std::ostringstream os;
    os << "n,exact,asymptotic,ratio\n";
    for (const auto& r : rep.rows)
        os << r.n << "," << r.exact.get_str() << "," << r.asymptotic << "," << r.ratio << "\n";
    os << "# mode=" << (mode == AlphaMode::Derived ? "derived" : "printed") << "\n";
    os << "# monotone=" << (rep.monotone ? "true" : "false") << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", rep.limit_estimate);
    os << "# limit_estimate=" << buf << "\n";
    if (rep.divergent_from_one)
        os << "# DIVERGENT-FROM-1\n";
    return os.str();
}

D3Report example_d3() {
    D3Report rep;
    const auto g = FiniteGroup::dihedral(3);
    auto grading = [&](std::initializer_list<const char*> ls) {
        std::vector<Elem> v;
        for (const char* l : ls)
            v.push_back(*g.find(l));
        return ElementaryGrading::analyze(g, v);
    };
    const auto gg = grading({"e", "e", "e", "s", "s", "r"});
    const auto gh = grading({"e", "e", "e", "r", "r", "s"});
    const RadicalConstant expected(Rational(10077696, 64), Rational(1, 96), -5);

    json items = json::array();
    std::string first_float;
    for (const auto* gr : {&gg, &gh}) {
        json it;
        json vec = json::array();
        for (Elem x : gr->vector())
            vec.push_back(g.label(x));
        it["vector"] = vec;
        // the support condition asks for the generated subgroup, not every component
        std::vector<Elem> supp;
        json dims = json::object();
        for (int x = 0; x < g.order(); ++x) {
            const long c = component_dim(*gr, x);
            dims[g.label(x)] = c;
            if (c > 0)
                supp.push_back(x);
        }
        const bool support_all = generated_subgroup(g, supp).size() == static_cast<std::size_t>(g.order());
        it["component_dims"] = dims;
        it["support_generates_G"] = support_all;
        const auto f = elementary_asymptotics(*gr, Target::CSequence, AlphaMode::Printed);
        it["b"] = to_string(f.b);
        it["d"] = f.d.get_si();
        it["alpha_exact"] = f.constant->str();
        it["alpha_float"] = eval_float(*f.constant, 12);
        const bool alpha_ok = *f.constant == expected;
        it["alpha_matches_expected"] = alpha_ok;
        const bool shape_ok = f.b == Rational(-13, 2) && f.d == 36;
        if (first_float.empty())
            first_float = it["alpha_float"];
        rep.ok = rep.ok && support_all && alpha_ok && shape_ok &&
                 it["alpha_float"].get<std::string>() == first_float;
        items.push_back(it);
    }
    const auto fp = weak_equivalence_fingerprint(gg, gh);
    rep.ok = rep.ok && !fp.equivalent_possible &&
             fp.reason == "component of dimension 12 unmatched";
    rep.body = json{{"gradings", items},
                    {"expected_alpha", expected.str()},
                    {"expected_alpha_float", eval_float(expected, 12)},
                    {"fingerprint", {{"equivalent_possible", fp.equivalent_possible},
                                     {"reason", fp.reason}}},
                    {"ok", rep.ok}};
    return rep;
}

} // namespace gcodim::app
