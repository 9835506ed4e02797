#include "gcodim/codim.hpp"

#include "gcodim/error.hpp"
#include "gcodim/partitions.hpp"

#include <atomic>
#include <numeric>

namespace gcodim {

namespace {

std::atomic<bool> g_fault{false};

} // namespace

void set_t_graded_fault(bool on) { g_fault = on; }

BigInt t_graded_unfolded(const ElementaryGrading& gr, int n) {
    if (n < 0)
        throw Error(Errc::BadParameter, "n must be nonnegative");
    const auto& mu = gr.mults();
    const int k = static_cast<int>(mu.size());
    // S[r] = sum over compositions of r into blocks i..k-1, built from the last block up.
    std::vector<BigInt> S(n + 1), next(n + 1);
    for (int r = 0; r <= n; ++r)
        S[r] = t_ungraded(r, mu[k - 1]);
    for (int i = k - 2; i >= 0; --i) {
        std::vector<BigInt> t(n + 1);
        for (int a = 0; a <= n; ++a)
            t[a] = t_ungraded(a, mu[i]);
        for (int r = 0; r <= n; ++r) {
            BigInt acc = 0;
            BigInt c = 1;  // C(r, a)
            for (int a = 0; a <= r; ++a) {
                acc += c * c * t[a] * S[r - a];
                c = c * (r - a) / (a + 1);
            }
            next[r] = acc;
        }
        S.swap(next);
    }
    return S[n];
}

BigInt t_graded(const ElementaryGrading& gr, int n) {
    // H_g acts freely on type vectors only for n >= 1; the empty tensor is a single invariant
    if (n == 0)
        return g_fault ? 2 : 1;
    BigInt total = t_graded_unfolded(gr, n);
    const BigInt h = static_cast<unsigned long>(gr.H_g().size());
    if (total % h != 0)
        throw Error(Errc::NonIntegerQuotient,
                    "sum " + total.get_str() + " not divisible by |H_g| = " + h.get_str());
    BigInt r = total / h;
    if (g_fault)
        r += 1;
    return r;
}

BigInt per_multiplicity_dim(const ElementaryGrading& gr, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != gr.k())
        throw Error(Errc::SizeMismatch, "one count per element of B expected");
    BigInt mult = multinomial(counts);
    BigInt r = mult * mult;
    for (int i = 0; i < gr.k(); ++i)
        r *= t_ungraded(counts[i], gr.mults()[i]);
    return r;
}

BigInt fine_invariant_count(const FiniteGroup& h, int n) {
    if (n < 1)
        throw Error(Errc::BadParameter, "n must be >= 1");
    return BigInt(static_cast<unsigned long>(commutator_subgroup(h).size())) *
           ipow(BigInt(h.order()), static_cast<unsigned long>(n - 1));
}

TaggedValue codim_proxy(const Structure& s, int n) {
    if (n < 0)
        throw Error(Errc::BadParameter, "n must be nonnegative");
    if (const auto* e = std::get_if<ElementaryGrading>(&s))
        return {t_graded(*e, n + 1), proxy_tag};
    if (const auto* f = std::get_if<FineGrading>(&s))
        return {fine_invariant_count(f->subgroup().as_group(), n + 1), proxy_tag};
    throw Error(Errc::UnsupportedStructure,
                "only the asymptotic shape is available for general G-simple structures");
}

} // namespace gcodim
