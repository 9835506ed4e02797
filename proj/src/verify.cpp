#include "gcodim/app.hpp"

#include "gcodim/error.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>

namespace gcodim::app {

namespace {

using Clock = std::chrono::steady_clock;

struct Sink {
    std::mutex mu;
    std::vector<VerifyRecord> recs;

    void put(VerifyRecord r) {
        std::lock_guard<std::mutex> lk(mu);
        recs.push_back(std::move(r));
    }
};

/// Runs f() -> (lhs, rhs, pass) and records it; cap overruns are skipped.
template <class F>
void record(Sink& sink, const std::string& check, const std::string& sid, int n, F&& f) {
    const auto t0 = Clock::now();
    try {
        auto [lhs, rhs, pass] = f();
        VerifyRecord r;
        r.check = check;
        r.structure = sid;
        r.n = n;
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.pass = pass;
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        sink.put(std::move(r));
    } catch (const Error& e) {
        if (e.code() != Errc::CapExceeded)
            throw;
    }
}

struct Triple {
    std::string lhs, rhs;
    bool pass;
};

Triple eq(const BigInt& a, const BigInt& b) { return {a.get_str(), b.get_str(), a == b}; }
Triple le(const BigInt& a, const BigInt& b) { return {a.get_str(), b.get_str(), a <= b}; }
BigInt bi(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

/// All vectors of k nonnegative integers summing to n.
void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k - 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= n; ++a) {
        cur.push_back(a);
        compositions(n - a, k, cur, out);
        cur.pop_back();
    }
}

std::string counts_str(const std::vector<int>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

BigInt sigma_total(const FiniteGroup& h, int n) {
    BigInt total = 0;
    std::vector<Elem> t(n, 0);
    while (true) {
        total += static_cast<unsigned long>(sigma_set(h, t).size());
        int p = n - 1;
        while (p >= 0 && ++t[p] == h.order()) {
            t[p] = 0;
            --p;
        }
        if (p < 0)
            break;
    }
    return total;
}

std::size_t in_order_counterexamples(const ElementaryGrading& gr, int len) {
    const auto reps = left_coset_reps(gr.H_B().as_group(), [&] {
        // H_g as a subgroup of H_B, re-indexed
        const auto& hb = gr.H_B().members();
        std::vector<Elem> idx;
        for (Elem x : gr.H_g().members())
            idx.push_back(static_cast<Elem>(std::lower_bound(hb.begin(), hb.end(), x) - hb.begin()));
        return ElementSet(gr.H_B().as_group(), idx, true);
    }());
    const auto& B = gr.B().members();
    const auto& G = gr.group();
    const int k = static_cast<int>(B.size());
    std::size_t bad = 0;
    std::vector<int> idx(len, 0);
    std::vector<Elem> h(len), gh(len);
    while (true) {
        for (int p = 0; p < len; ++p)
            h[p] = B[idx[p]];
        if (is_complete(h, gr) && is_in_order(h, gr)) {
            for (Elem r : reps) {
                if (r == 0)
                    continue;
                const Elem g = gr.H_B().members()[r];
                for (int p = 0; p < len; ++p)
                    gh[p] = G.mul(g, h[p]);
                if (is_in_order(gh, gr))
                    ++bad;
            }
        }
        int p = len - 1;
        while (p >= 0 && ++idx[p] == k) {
            idx[p] = 0;
            --p;
        }
        if (p < 0)
            break;
    }
    return bad;
}

void elementary_checks(const NamedStructure& ns, const ElementaryGrading& gr,
                       const VerifyOptions& opt, std::vector<std::function<void(Sink&)>>& tasks) {
    const std::string sid = ns.id;
    const OracleCaps caps = opt.caps;
    for (int n = 0; n <= opt.t_max_n; ++n) {
        tasks.push_back([=](Sink& s) {
            record(s, "t_graded==invariant_dim", sid, n, [&] {
                return eq(t_graded(gr, n), bi(invariant_dim_bruteforce(gr, n, InvariantFilter::all(), caps)));
            });
        });
        if (n >= 1) {
            tasks.push_back([=](Sink& s) {
                record(s, "sum_per_multiplicity==|H_g|*t_graded", sid, n, [&] {
                    std::vector<std::vector<int>> comps;
                    std::vector<int> cur;
                    compositions(n, gr.k(), cur, comps);
                    BigInt sum = 0;
                    for (const auto& c : comps)
                        sum += per_multiplicity_dim(gr, c);
                    return eq(sum, BigInt(static_cast<unsigned long>(gr.H_g().size())) * t_graded(gr, n));
                });
            });
            tasks.push_back([=](Sink& s) {
                std::vector<std::vector<int>> comps;
                std::vector<int> cur;
                compositions(n, gr.k(), cur, comps);
                for (const auto& c : comps)
                    record(s, "per_multiplicity==formula" + counts_str(c), sid, n, [&] {
                        return eq(bi(invariant_dim_bruteforce(gr, n, InvariantFilter::multiplicity(c), caps)),
                                  per_multiplicity_dim(gr, c));
                    });
            });
            tasks.push_back([=](Sink& s) {
                record(s, "SI<=I", sid, n, [&] {
                    return le(bi(invariant_dim_bruteforce(gr, n, InvariantFilter::n_cycles_only(), caps)),
                              bi(invariant_dim_bruteforce(gr, n, InvariantFilter::all(), caps)));
                });
            });
            tasks.push_back([=](Sink& s) {
                record(s, "sn_sum==dim_I", sid, n, [&] {
                    if (n > 4)
                        throw Error(Errc::CapExceeded, "skip");
                    const auto dec = sn_module_decomposition(gr, n, caps);
                    BigInt sum = 0;
                    bool nonneg = true;
                    for (const auto& c : dec) {
                        sum += c.multiplicity * sn_dim(c.lambda);
                        nonneg = nonneg && c.multiplicity >= 0;
                    }
                    const BigInt dim = bi(invariant_dim_bruteforce(gr, n, InvariantFilter::all(), caps));
                    return Triple{sum.get_str(), dim.get_str(), sum == dim && nonneg};
                });
            });
        }
    }
    const auto S = GSimpleStructure::from_elementary(gr);
    for (int n = 1; n <= opt.t_max_n; ++n)
        tasks.push_back([=](Sink& s) {
            record(s, "trace==codim(n-1)", sid, n, [&] {
                return eq(trace_space_dim(S, n, caps), codim_bruteforce(S, n - 1, caps));
            });
        });
    for (int n = 0; n + 1 <= opt.t_max_n; ++n)
        tasks.push_back([=](Sink& s) {
            record(s, "codim<=SI(n+1)", sid, n, [&] {
                return le(codim_bruteforce(S, n, caps),
                          bi(invariant_dim_bruteforce(gr, n + 1, InvariantFilter::n_cycles_only(), caps)));
            });
        });
    const int kB = gr.k();
    for (int len = kB; len <= 6; ++len)
        tasks.push_back([=](Sink& s) {
            record(s, "in_order_translation_counterexamples==0", sid, len, [&] {
                return eq(bi(in_order_counterexamples(gr, len)), BigInt(0));
            });
        });
}

void fine_checks(const NamedStructure& ns, const FineGrading& f, const VerifyOptions& opt,
                 std::vector<std::function<void(Sink&)>>& tasks) {
    const std::string sid = ns.id;
    const OracleCaps caps = opt.caps;
    const FiniteGroup h = f.subgroup().as_group();
    for (int n = 1; n <= 5; ++n)
        tasks.push_back([=](Sink& s) {
            record(s, "fine_dp==|H'||H|^(n-1)", sid, n, [&] {
                return eq(fine_invariant_dim_bruteforce(h, n), fine_invariant_count(h, n));
            });
        });
    const auto S = GSimpleStructure::from_fine(f);
    for (int n = 1; n <= opt.t_max_n; ++n)
        tasks.push_back([=](Sink& s) {
            record(s, "trace==codim(n-1)", sid, n, [&] {
                return eq(trace_space_dim(S, n, caps), codim_bruteforce(S, n - 1, caps));
            });
        });
    for (int n = 1; n + 1 <= opt.t_max_n; ++n) {
        tasks.push_back([=](Sink& s) {
            record(s, "codim<=I(n+1)", sid, n, [&] {
                return le(codim_bruteforce(S, n, caps), fine_invariant_count(h, n + 1));
            });
        });
        tasks.push_back([=](Sink& s) {
            record(s, "codim==sum|Sigma_h|", sid, n, [&] {
                return eq(codim_bruteforce(S, n, caps), sigma_total(h, n));
            });
        });
        if (h.is_abelian())
            tasks.push_back([=](Sink& s) {
                record(s, "codim==I(n+1)", sid, n, [&] {
                    return eq(codim_bruteforce(S, n, caps), fine_invariant_count(h, n + 1));
                });
            });
    }
}

void gsimple_checks(const NamedStructure& ns, const GSimpleStructure& S, const VerifyOptions& opt,
                    std::vector<std::function<void(Sink&)>>& tasks) {
    const std::string sid = ns.id;
    const OracleCaps caps = opt.caps;
    tasks.push_back([=](Sink& s) {
        record(s, "dim_Ae==sum_m_i^2", sid, 0, [&] {
            long ss = 0;
            for (int m : S.mults())
                ss += static_cast<long>(m) * m;
            return eq(BigInt(S.dim_Ae()), BigInt(ss));
        });
    });
    for (int n = 1; n <= opt.t_max_n; ++n)
        tasks.push_back([=](Sink& s) {
            record(s, "trace==codim(n-1)", sid, n, [&] {
                return eq(trace_space_dim(S, n, caps), codim_bruteforce(S, n - 1, caps));
            });
        });
}

NamedStructure elementary(const std::string& id, const FiniteGroup& g,
                          const std::vector<std::string>& labels) {
    std::vector<Elem> v;
    for (const auto& l : labels)
        v.push_back(*g.find(l));
    return {id, ElementaryGrading::analyze(g, v)};
}

NamedStructure fine(const std::string& id, const FiniteGroup& g) {
    return {id, FineGrading(g, whole_group(g))};
}

} // namespace

std::vector<NamedStructure> default_fleet() {
    const auto triv = FiniteGroup::trivial();
    const auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    const auto d3 = FiniteGroup::dihedral(3);
    return {
        elementary("trivial_m2", triv, {"e", "e"}),
        elementary("Z2_(0,1)", z2, {"0", "1"}),
        elementary("Z3_(0,1)", z3, {"0", "1"}),
        elementary("D3_g_(e,e,e,s,s,r)", d3, {"e", "e", "e", "s", "s", "r"}),
        elementary("D3_h_(e,e,e,r,r,s)", d3, {"e", "e", "e", "r", "r", "s"}),
        fine("fine_Z4", FiniteGroup::cyclic(4)),
        fine("fine_S3", FiniteGroup::symmetric(3)),
        fine("fine_Q8", FiniteGroup::quaternion8()),
    };
}

std::vector<NamedStructure> parse_fleet(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("structures"))
            throw Error(Errc::ParseError, "fleet object needs \"structures\"");
        arr = &j["structures"];
    }
    if (!arr->is_array())
        throw Error(Errc::ParseError, "fleet must be an array of structures");
    std::vector<NamedStructure> out;
    for (const auto& s : *arr)
        out.push_back(parse_structure(s));
    return out;
}

std::vector<VerifyRecord> run_verify(const std::vector<NamedStructure>& fleet,
                                     const VerifyOptions& opt) {
    std::vector<std::function<void(Sink&)>> tasks;
    for (const auto& ns : fleet) {
        if (const auto* e = std::get_if<ElementaryGrading>(&ns.s))
            elementary_checks(ns, *e, opt, tasks);
        else if (const auto* f = std::get_if<FineGrading>(&ns.s))
            fine_checks(ns, *f, opt, tasks);
        else
            gsimple_checks(ns, std::get<GSimpleStructure>(ns.s), opt, tasks);
    }
    Sink sink;
    parallel_for(tasks.size(), opt.jobs, [&](std::size_t i) { tasks[i](sink); });
    auto recs = std::move(sink.recs);
    std::sort(recs.begin(), recs.end(), [](const VerifyRecord& a, const VerifyRecord& b) {
        return std::tie(a.check, a.structure, a.n) < std::tie(b.check, b.structure, b.n);
    });
    return recs;
}

json report_json(const std::vector<VerifyRecord>& recs, bool timing) {
    json arr = json::array();
    std::size_t failed = 0;
    for (const auto& r : recs) {
        json o{{"check", r.check}, {"structure", r.structure}, {"n", r.n},
               {"lhs", r.lhs},     {"rhs", r.rhs},             {"pass", r.pass}};
        if (timing)
            o["elapsed_ms"] = r.elapsed_ms;
        if (!r.pass)
            ++failed;
        arr.push_back(std::move(o));
    }
    return json{{"records", arr}, {"total", recs.size()}, {"failed", failed}};
}

} // namespace gcodim::app
