#include "gcodim/oracle.hpp"

#include "gcodim/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace gcodim {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err)
                        err = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool is_n_cycle(const Perm& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0)
        return false;
    int len = 1;
    for (int j = p[0]; j != 0; j = p[j])
        ++len;
    return len == n;
}

namespace {

bool valid_perm(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

/// Tensor basis of V: blocks in B order.
struct Blocks {
    int m = 0;
    std::vector<int> offset, size;  // by block position

    explicit Blocks(const ElementaryGrading& gr) : m(gr.m()) {
        int off = 0;
        for (int s : gr.mults()) {
            offset.push_back(off);
            size.push_back(s);
            off += s;
        }
    }
};

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

std::vector<Elem> orbit_canonical(const ElementaryGrading& gr, const std::vector<Elem>& h) {
    const auto& G = gr.group();
    std::vector<Elem> best = h, cur(h.size());
    for (Elem g : gr.H_g().members()) {
        for (std::size_t i = 0; i < h.size(); ++i)
            cur[i] = G.mul(g, h[i]);
        if (cur < best)
            best = cur;
    }
    return best;
}

TOpLabel make_top_label(const ElementaryGrading& gr, Perm sigma, const std::vector<Elem>& h) {
    return TOpLabel{std::move(sigma), orbit_canonical(gr, h)};
}

OpVec t_prime_vector(const ElementaryGrading& gr, const Perm& sigma, const std::vector<Elem>& h) {
    const int n = static_cast<int>(h.size());
    if (static_cast<int>(sigma.size()) != n || !valid_perm(sigma))
        throw Error(Errc::BlockMismatch, "permutation does not match tensor length");
    Blocks bl(gr);
    std::vector<int> blk(n);
    for (int p = 0; p < n; ++p) {
        blk[p] = gr.block_of(h[p]);
        if (blk[p] < 0)
            throw Error(Errc::BlockMismatch, "type entry " + gr.group().label(h[p]) + " not in B");
    }
    const std::uint64_t M = upow(static_cast<std::uint64_t>(bl.m), n);
    OpVec v;
    std::vector<int> k(n, 0), in(n);
    while (true) {
        for (int p = 0; p < n; ++p)
            in[p] = bl.offset[blk[p]] + k[p];
        std::uint64_t ic = 0, oc = 0;
        for (int p = 0; p < n; ++p) {
            ic = ic * bl.m + static_cast<std::uint64_t>(in[p]);
            oc = oc * bl.m + static_cast<std::uint64_t>(in[sigma[p]]);
        }
        v.entries.emplace_back(ic * M + oc, Rational(1));
        int p = n - 1;
        while (p >= 0 && ++k[p] == bl.size[blk[p]]) {
            k[p] = 0;
            --p;
        }
        if (p < 0)
            break;
    }
    v.finalize();
    return v;
}

OpVec t_op_vector(const ElementaryGrading& gr, const TOpLabel& label, int n) {
    if (static_cast<int>(label.h.size()) != n)
        throw Error(Errc::BlockMismatch, "type vector length differs from n");
    const auto& G = gr.group();
    OpVec v;
    std::vector<Elem> gh(n);
    for (Elem g : gr.H_g().members()) {
        for (int i = 0; i < n; ++i)
            gh[i] = G.mul(g, label.h[i]);
        OpVec part = t_prime_vector(gr, label.sigma, gh);
        v.entries.insert(v.entries.end(), part.entries.begin(), part.entries.end());
    }
    v.finalize();
    return v;
}

OpVec conjugate_positions(const OpVec& v, const Perm& tau, int m, int n) {
    const std::uint64_t M = upow(static_cast<std::uint64_t>(m), n);
    std::vector<int> a(n), b(n), a2(n), b2(n);
    auto decode = [&](std::uint64_t c, std::vector<int>& d) {
        for (int p = n - 1; p >= 0; --p) {
            d[p] = static_cast<int>(c % m);
            c /= m;
        }
    };
    auto encode = [&](const std::vector<int>& d) {
        std::uint64_t c = 0;
        for (int p = 0; p < n; ++p)
            c = c * m + static_cast<std::uint64_t>(d[p]);
        return c;
    };
    OpVec out;
    out.entries.reserve(v.size());
    for (const auto& [l, c] : v.entries) {
        decode(l / M, a);
        decode(l % M, b);
        for (int p = 0; p < n; ++p) {
            a2[tau[p]] = a[p];
            b2[tau[p]] = b[p];
        }
        out.entries.emplace_back(encode(a2) * M + encode(b2), c);
    }
    out.finalize();
    return out;
}

namespace {

void check_invariant_caps(const ElementaryGrading& gr, int n, const OracleCaps& caps) {
    if (n < 0)
        throw Error(Errc::BadParameter, "n must be nonnegative");
    if (n > caps.max_n)
        throw Error(Errc::CapExceeded, "n = " + std::to_string(n) + " exceeds invariant cap " +
                                           std::to_string(caps.max_n));
    long double dim = 1;
    for (int i = 0; i < n; ++i)
        dim *= gr.m();
    if (dim > static_cast<long double>(caps.max_tensor_dim))
        throw Error(Errc::CapExceeded, "tensor dimension m^n exceeds cap");
}

/// Calls f(h) for every h in B^n, lex order.
template <class F>
void for_each_type(const ElementaryGrading& gr, int n, F&& f) {
    const auto& B = gr.B().members();
    const int k = static_cast<int>(B.size());
    std::vector<int> idx(n, 0);
    std::vector<Elem> h(n);
    while (true) {
        for (int p = 0; p < n; ++p)
            h[p] = B[idx[p]];
        f(h);
        int p = n - 1;
        while (p >= 0 && ++idx[p] == k) {
            idx[p] = 0;
            --p;
        }
        if (p < 0)
            break;
    }
}

std::vector<int> type_counts(const ElementaryGrading& gr, const std::vector<Elem>& h) {
    std::vector<int> c(gr.k(), 0);
    for (Elem x : h)
        ++c[gr.block_of(x)];
    return c;
}

} // namespace

std::size_t invariant_dim_bruteforce(const ElementaryGrading& gr, int n,
                                     const InvariantFilter& filter, const OracleCaps& caps) {
    check_invariant_caps(gr, n, caps);
    if (filter.kind == InvariantFilter::Kind::Multiplicity) {
        if (static_cast<int>(filter.counts.size()) != gr.k())
            throw Error(Errc::BlockMismatch, "multiplicity vector must have one entry per B element");
        if (std::accumulate(filter.counts.begin(), filter.counts.end(), 0) != n)
            return 0;
    }
    if (n == 0)
        return filter.kind == InvariantFilter::Kind::NCyclesOnly ? 0 : 1;
    StreamingRank rk(caps.rank);
    const auto perms = all_perms(n);
    for (const auto& sigma : perms) {
        if (filter.kind == InvariantFilter::Kind::NCyclesOnly && !is_n_cycle(sigma))
            continue;
        for_each_type(gr, n, [&](const std::vector<Elem>& h) {
            if (filter.kind == InvariantFilter::Kind::Multiplicity) {
                if (type_counts(gr, h) != filter.counts)
                    return;
                if (filter.unfolded)
                    rk.add(t_prime_vector(gr, sigma, h));
                else
                    rk.add(t_op_vector(gr, TOpLabel{sigma, h}, n));
                return;
            }
            if (orbit_canonical(gr, h) != h)
                return;
            rk.add(t_op_vector(gr, TOpLabel{sigma, h}, n));
        });
    }
    return rk.rank();
}

namespace {

/// Basis of A = F^mu H ⊗ M_m as (h, i, j), indexed h_pos*m*m + i*m + j.
struct AlgebraBasis {
    int m = 0, hn = 0, dim = 0;
    std::vector<Elem> h_of;      // by basis index
    std::vector<int> row, col;   // by basis index
    std::vector<Elem> degree;    // by basis index
    std::vector<std::vector<int>> by_degree;  // degree -> sorted basis indices
    std::vector<int> pos_in_degree;           // basis index -> position within its degree list
    std::vector<int> hpos;                    // group element -> position in H, or -1

    explicit AlgebraBasis(const GSimpleStructure& s) {
        const auto& G = s.group();
        const auto& v = s.vector();
        const auto& hm = s.fine().subgroup().members();
        m = s.m();
        hn = static_cast<int>(hm.size());
        dim = hn * m * m;
        hpos.assign(G.order(), -1);
        for (int a = 0; a < hn; ++a)
            hpos[hm[a]] = a;
        by_degree.assign(G.order(), {});
        for (int a = 0; a < hn; ++a)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    h_of.push_back(hm[a]);
                    row.push_back(i);
                    col.push_back(j);
                    Elem d = G.mul(G.mul(G.inv(v[i]), hm[a]), v[j]);
                    degree.push_back(d);
                }
        pos_in_degree.assign(dim, 0);
        for (int b = 0; b < dim; ++b) {
            pos_in_degree[b] = static_cast<int>(by_degree[degree[b]].size());
            by_degree[degree[b]].push_back(b);
        }
    }
};

/// Enumerates the product expansion; emit(result basis index, monomial code, coefficient).
template <class Emit>
void expand_product(const GSimpleStructure& s, const AlgebraBasis& ab,
                    const std::vector<Elem>& degrees, const Perm& sigma, Emit&& emit) {
    const int n = static_cast<int>(degrees.size());
    if (static_cast<int>(sigma.size()) != n || !valid_perm(sigma))
        throw Error(Errc::BlockMismatch, "permutation does not match degree tuple");
    const auto& G = s.group();
    const auto& fine = s.fine();
    std::vector<std::uint64_t> weight(n);
    std::uint64_t w = 1;
    for (int r = 0; r < n; ++r) {
        const auto sz = ab.by_degree[degrees[r]].size();
        if (sz == 0)
            return;
        weight[r] = w;
        if (w > (std::uint64_t{1} << 62) / sz / static_cast<std::uint64_t>(ab.dim))
            throw Error(Errc::CapExceeded, "monomial code overflow");
        w *= sz;
    }
    if (n == 0) {
        // empty product: the unit, sum of (e, i, i)
        for (int i = 0; i < ab.m; ++i)
            emit(ab.hpos[0] * ab.m * ab.m + i * ab.m + i, std::uint64_t{0}, Rational(1));
        return;
    }
    const bool twisted = fine.cocycle().has_value();
    auto rec = [&](auto&& self, int p, Elem h, int i0, int j, std::uint64_t code,
                   const Rational& coef) -> void {
        if (p == n) {
            emit(ab.hpos[h] * ab.m * ab.m + i0 * ab.m + j, code, coef);
            return;
        }
        const int r = sigma[p];
        for (int b : ab.by_degree[degrees[r]]) {
            if (ab.row[b] != j)
                continue;
            const std::uint64_t c2 = code + weight[r] * static_cast<std::uint64_t>(ab.pos_in_degree[b]);
            if (twisted)
                self(self, p + 1, G.mul(h, ab.h_of[b]), i0, ab.col[b], c2,
                     coef * fine.mu(h, ab.h_of[b]));
            else
                self(self, p + 1, G.mul(h, ab.h_of[b]), i0, ab.col[b], c2, coef);
        }
    };
    const int r0 = sigma[0];
    const Rational one(1);
    for (int b : ab.by_degree[degrees[r0]])
        rec(rec, 1, ab.h_of[b], ab.row[b], ab.col[b],
            weight[r0] * static_cast<std::uint64_t>(ab.pos_in_degree[b]), one);
}

void check_codim_caps(const GSimpleStructure& s, int n, const OracleCaps& caps) {
    if (n < 0)
        throw Error(Errc::BadParameter, "n must be nonnegative");
    if (s.m() > caps.codim_max_m)
        throw Error(Errc::CapExceeded, "m = " + std::to_string(s.m()) + " exceeds codim cap " +
                                           std::to_string(caps.codim_max_m));
    if (n > caps.codim_max_n(s.m()))
        throw Error(Errc::CapExceeded, "n = " + std::to_string(n) + " exceeds codim cap " +
                                           std::to_string(caps.codim_max_n(s.m())));
    if (s.group().order() > caps.codim_max_group)
        throw Error(Errc::CapExceeded, "|G| = " + std::to_string(s.group().order()) +
                                           " exceeds codim cap " +
                                           std::to_string(caps.codim_max_group));
}

template <class VecFn>
BigInt sum_tuple_ranks(const GSimpleStructure& s, int n, const OracleCaps& caps, VecFn&& make) {
    std::vector<Elem> supp;
    for (int g = 0; g < s.group().order(); ++g)
        if (s.component_dim(g) > 0)
            supp.push_back(g);
    const std::size_t k = supp.size();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= k;
    const auto perms = all_perms(n);
    std::vector<std::size_t> ranks(total, 0);
    parallel_for(total, caps.jobs, [&](std::size_t t) {
        std::vector<Elem> deg(n);
        std::size_t x = t;
        for (int p = n - 1; p >= 0; --p) {
            deg[p] = supp[x % k];
            x /= k;
        }
        StreamingRank rk(caps.rank);
        for (const auto& sigma : perms) {
            auto v = make(deg, sigma);
            if (!v.empty())
                rk.add(v);
        }
        ranks[t] = rk.rank();
    });
    BigInt sum = 0;
    for (auto r : ranks)
        sum += static_cast<unsigned long>(r);
    return sum;
}

} // namespace

MonoVec graded_monomial_vector(const GSimpleStructure& s, const std::vector<Elem>& degrees,
                               const Perm& sigma) {
    AlgebraBasis ab(s);
    MonoVec v;
    const auto dim = static_cast<std::uint64_t>(ab.dim);
    expand_product(s, ab, degrees, sigma, [&](int idx, std::uint64_t code, const Rational& c) {
        v.entries.emplace_back(code * dim + static_cast<std::uint64_t>(idx), c);
    });
    v.finalize();
    return v;
}

MonoVec graded_trace_vector(const GSimpleStructure& s, const std::vector<Elem>& degrees,
                            const Perm& sigma) {
    AlgebraBasis ab(s);
    MonoVec v;
    const int e_pos = ab.hpos[0];
    expand_product(s, ab, degrees, sigma, [&](int idx, std::uint64_t code, const Rational& c) {
        const int hp = idx / (ab.m * ab.m);
        const int i = (idx / ab.m) % ab.m, j = idx % ab.m;
        if (hp == e_pos && i == j)
            v.entries.emplace_back(code, c);
    });
    v.finalize();
    return v;
}

BigInt codim_bruteforce(const GSimpleStructure& s, int n, const OracleCaps& caps) {
    check_codim_caps(s, n, caps);
    if (n == 0)
        return 1;
    AlgebraBasis ab(s);
    const auto dim = static_cast<std::uint64_t>(ab.dim);
    return sum_tuple_ranks(s, n, caps, [&](const std::vector<Elem>& deg, const Perm& sigma) {
        MonoVec v;
        expand_product(s, ab, deg, sigma, [&](int idx, std::uint64_t code, const Rational& c) {
            v.entries.emplace_back(code * dim + static_cast<std::uint64_t>(idx), c);
        });
        v.finalize();
        return v;
    });
}

BigInt trace_space_dim(const GSimpleStructure& s, int n, const OracleCaps& caps) {
    check_codim_caps(s, n, caps);
    if (n == 0)
        throw Error(Errc::BadParameter, "trace space needs n >= 1");
    AlgebraBasis ab(s);
    const int e_pos = ab.hpos[0];
    return sum_tuple_ranks(s, n, caps, [&](const std::vector<Elem>& deg, const Perm& sigma) {
        MonoVec v;
        expand_product(s, ab, deg, sigma, [&](int idx, std::uint64_t code, const Rational& c) {
            const int hp = idx / (ab.m * ab.m);
            const int i = (idx / ab.m) % ab.m, j = idx % ab.m;
            if (hp == e_pos && i == j)
                v.entries.emplace_back(code, c);
        });
        v.finalize();
        return v;
    });
}

std::vector<SnComponent> sn_module_decomposition(const ElementaryGrading& gr, int n,
                                                 const OracleCaps& caps) {
    if (n > caps.sn_max_n)
        throw Error(Errc::CapExceeded, "n exceeds the decomposition cap");
    check_invariant_caps(gr, n, caps);
    std::vector<SnComponent> out;
    if (n == 0) {
        out.push_back({Partition(), 1});
        return out;
    }
    const std::uint64_t p = caps.rank.prime;
    auto to_row = [&](const OpVec& v) {
        ModRow r;
        for (const auto& [l, c] : v.entries) {
            std::uint64_t x = modp::from_rational(c, p);
            if (x)
                r.emplace_back(static_cast<Col>(l), x);
        }
        return r;
    };
    ModularEchelon ech(p);
    std::vector<OpVec> basis;
    for (const auto& sigma : all_perms(n))
        for_each_type(gr, n, [&](const std::vector<Elem>& h) {
            if (orbit_canonical(gr, h) != h)
                return;
            OpVec v = t_op_vector(gr, TOpLabel{sigma, h}, n);
            if (ech.add(to_row(v)))
                basis.push_back(std::move(v));
        });
    const std::vector<Col> piv = ech.pivot_columns();
    const std::size_t d = basis.size();
    auto restrict = [&](const OpVec& v) {
        std::vector<std::uint64_t> row(d, 0);
        for (const auto& [l, c] : v.entries) {
            auto it = std::lower_bound(piv.begin(), piv.end(), static_cast<Col>(l));
            if (it != piv.end() && *it == static_cast<Col>(l))
                row[it - piv.begin()] = modp::from_rational(c, p);
        }
        return row;
    };
    std::vector<std::vector<std::uint64_t>> bp(d);
    for (std::size_t i = 0; i < d; ++i)
        bp[i] = restrict(basis[i]);
    const auto inv = mod_inverse(bp, p);

    const auto classes = partitions(n, n);
    std::vector<long long> chi(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Perm tau(n);
        int pos = 0;
        for (int len : classes[c].parts) {
            for (int i = 0; i < len; ++i)
                tau[pos + i] = pos + (i + 1) % len;
            pos += len;
        }
        std::uint64_t tr = 0;
        for (std::size_t i = 0; i < d; ++i) {
            auto row = restrict(conjugate_positions(basis[i], tau, gr.m(), n));
            for (std::size_t j = 0; j < d; ++j)
                if (row[j])
                    tr = modp::add(tr, modp::mul(row[j], inv[j][i], p), p);
        }
        chi[c] = modp::lift(tr, p);
    }
    const BigInt nf = factorial(static_cast<unsigned long>(n));
    for (const auto& lam : classes) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
            acc += class_size(classes[c]) * BigInt(static_cast<long>(chi[c])) *
                   sn_character_value(lam, classes[c]);
        if (acc % nf != 0)
            throw Error(Errc::NonIntegerQuotient, "character inner product not integral for " +
                                                      lam.str());
        out.push_back({lam, acc / nf});
    }
    return out;
}

bool is_complete(const std::vector<Elem>& h, const ElementaryGrading& gr) {
    std::vector<char> seen(gr.k(), 0);
    for (Elem x : h) {
        int b = gr.block_of(x);
        if (b < 0)
            throw Error(Errc::BlockMismatch, "entry not in B");
        seen[b] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_in_order(const std::vector<Elem>& h, const ElementaryGrading& gr) {
    std::vector<int> cnt(gr.k(), 0);
    for (Elem x : h) {
        int b = gr.block_of(x);
        if (b < 0)
            throw Error(Errc::BlockMismatch, "entry not in B");
        ++cnt[b];
    }
    // group counts by multiplicity value, ascending
    std::vector<int> vals = gr.mults();
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<int> lo(vals.size(), INT32_MAX), hi(vals.size(), -1);
    for (int b = 0; b < gr.k(); ++b) {
        auto i = std::lower_bound(vals.begin(), vals.end(), gr.mults()[b]) - vals.begin();
        lo[i] = std::min(lo[i], cnt[b]);
        hi[i] = std::max(hi[i], cnt[b]);
    }
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        if (!(hi[i] < lo[i + 1]))
            return false;
    return true;
}

BigInt fine_invariant_dim_bruteforce(const FiniteGroup& h, int n) {
    if (n < 0)
        throw Error(Errc::BadParameter, "n must be nonnegative");
    const int N = h.order();
    std::vector<BigInt> cnt(N, 0), nxt(N);
    cnt[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(nxt.begin(), nxt.end(), BigInt(0));
        for (int x = 0; x < N; ++x)
            if (cnt[x] != 0)
                for (int y = 0; y < N; ++y)
                    nxt[h.mul(x, y)] += cnt[x];
        cnt.swap(nxt);
    }
    BigInt total = 0;
    const auto hp = commutator_subgroup(h);
    for (Elem x : hp.members())
        total += cnt[x];
    return total;
}

} // namespace gcodim
