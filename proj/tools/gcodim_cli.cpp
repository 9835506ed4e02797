#include "gcodim/app.hpp"
#include "gcodim/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace gcodim;
using namespace gcodim::app;

namespace {

NamedStructure load_structure(const std::string& path) {
    if (path.empty())
        throw Error(Errc::ParseError, "--structure is required");
    return parse_structure(read_json_source(path));
}

void apply_caps(OracleCaps& caps, int cap_n, bool exact, unsigned jobs) {
    if (cap_n > 0) {
        caps.max_n = cap_n;
        caps.codim_max_n_m3 = cap_n;
        caps.codim_max_n_small = cap_n;
        caps.sn_max_n = cap_n;
    }
    caps.rank.mode = exact ? RankMode::Exact : RankMode::Modular;
    caps.jobs = jobs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded codimension toolkit"};
    app.require_subcommand(1);

    std::string structure, fleet, n_range, n_list, mode = "derived", target = "c", format = "json",
                                                    fault, group_name, lambda;
    int n_single = -1, digits = 12, cap_n = 0, max_len = 6, m_arg = 2;
    unsigned jobs = 0;
    bool exact = false, modular = false, no_timing = false;

    auto* c_group = app.add_subcommand("group", "group table, commutator subgroup and a commutator tuple");
    c_group->add_option("name", group_name, "builtin name (C4, D3, S3, Q8, C2xC2, ...) or JSON file")->required();
    c_group->add_option("--max-len", max_len, "longest tuple searched");

    auto* c_analyze = app.add_subcommand("analyze", "structure data: B, H_B, H_g, dims, shape");
    c_analyze->add_option("--structure", structure)->required();

    auto* c_codim = app.add_subcommand("codim", "codimension sequence");
    c_codim->add_option("--structure", structure)->required();
    c_codim->add_option("--n", n_single);
    c_codim->add_option("--n-range", n_range, "a..b");
    c_codim->add_option("--mode", mode, "exact | proxy | t")->check(CLI::IsMember({"exact", "proxy", "t"}));
    c_codim->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_codim->add_option("--jobs", jobs);
    c_codim->add_option("--cap-n", cap_n);
    auto* f_exact = c_codim->add_flag("--exact", exact, "exact rational elimination");
    c_codim->add_flag("--modular", modular, "modular elimination (default)")->excludes(f_exact);

    auto* c_asym = app.add_subcommand("asym", "asymptotic form alpha n^b d^n");
    c_asym->add_option("--structure", structure)->required();
    c_asym->add_option("--target", target)->check(CLI::IsMember({"t", "c"}));
    c_asym->add_option("--mode", mode)->check(CLI::IsMember({"derived", "printed"}));
    c_asym->add_option("--digits", digits)->check(CLI::Range(1, 50));

    auto* c_conv = app.add_subcommand("converge", "exact / asymptotic ratios as CSV");
    c_conv->add_option("--structure", structure)->required();
    c_conv->add_option("--n", n_list, "a,b,c")->required();
    c_conv->add_option("--mode", mode)->check(CLI::IsMember({"derived", "printed"}));

    auto* c_verify = app.add_subcommand("verify", "run the oracle cross-checks");
    c_verify->add_option("--fleet", fleet, "JSON fleet file (default: built-in fleet)");
    c_verify->add_option("--jobs", jobs);
    c_verify->add_option("--cap-n", cap_n);
    auto* v_exact = c_verify->add_flag("--exact", exact);
    c_verify->add_flag("--modular", modular)->excludes(v_exact);
    c_verify->add_flag("--no-timing", no_timing, "omit elapsed_ms");
    c_verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"t-graded"}));

    auto* c_d3 = app.add_subcommand("example-d3", "the two D3 gradings of M_6");

    auto* c_part = app.add_subcommand("partition-dim", "d_lambda by the hook length formula");
    c_part->add_option("lambda", lambda, "e.g. 3,2,1")->required();

    auto* c_tung = app.add_subcommand("t-ungraded", "t_n(m)");
    c_tung->add_option("--n", n_single)->required();
    c_tung->add_option("--m", m_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ParseFailure;
    }

    try {
        if (c_group->parsed()) {
            FiniteGroup g = group_name.find(".json") != std::string::npos
                                ? parse_group(read_json_source(group_name))
                                : FiniteGroup::builtin(group_name);
            std::cout << group_json(g, max_len).dump(2) << "\n";
        } else if (c_analyze->parsed()) {
            std::cout << analyze_json(load_structure(structure)).dump(2) << "\n";
        } else if (c_codim->parsed()) {
            CodimRequest req;
            req.kind = mode == "proxy" ? CodimKind::Proxy : mode == "t" ? CodimKind::T : CodimKind::Exact;
            if (!n_range.empty())
                std::tie(req.n_lo, req.n_hi) = parse_range(n_range);
            else if (n_single >= 0)
                req.n_lo = req.n_hi = n_single;
            req.csv = format == "csv";
            apply_caps(req.caps, cap_n, exact, jobs);
            std::cout << codim_output(load_structure(structure), req);
        } else if (c_asym->parsed()) {
            AsymRequest req;
            req.target = target == "t" ? Target::TSequence : Target::CSequence;
            req.mode = mode == "printed" ? AlphaMode::Printed : AlphaMode::Derived;
            req.digits = digits;
            std::cout << asym_json(load_structure(structure), req).dump(2) << "\n";
        } else if (c_conv->parsed()) {
            std::cout << converge_csv(load_structure(structure),
                                      mode == "printed" ? AlphaMode::Printed : AlphaMode::Derived,
                                      parse_int_list(n_list));
        } else if (c_verify->parsed()) {
            VerifyOptions opt;
            apply_caps(opt.caps, cap_n, exact, 1);
            opt.jobs = jobs;
            opt.timing = !no_timing;
            if (cap_n > 0)
                opt.t_max_n = cap_n;
            if (fault == "t-graded")
                set_t_graded_fault(true);
            const auto fl = fleet.empty() ? default_fleet() : parse_fleet(read_json_source(fleet));
            const auto recs = run_verify(fl, opt);
            std::cout << report_json(recs, opt.timing).dump(2) << "\n";
            for (const auto& r : recs)
                if (!r.pass) {
                    std::cerr << "FAIL " << r.check << " " << r.structure << " n=" << r.n
                              << ": lhs=" << r.lhs << " rhs=" << r.rhs << "\n";
                    return VerifyFailed;
                }
        } else if (c_d3->parsed()) {
            const auto rep = example_d3();
            std::cout << rep.body.dump(2) << "\n";
            if (!rep.ok)
                return VerifyFailed;
        } else if (c_part->parsed()) {
            std::cout << sn_dim(Partition(parse_int_list(lambda))).get_str() << "\n";
        } else if (c_tung->parsed()) {
            std::cout << t_ungraded(n_single, m_arg).get_str() << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::ParseError ? ParseFailure : SemanticFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return SemanticFailure;
    }
    return Ok;
}
