#include "gcodim/grading.hpp"

#include "gcodim/error.hpp"

#include <algorithm>
#include <map>

namespace gcodim {

ElementaryGrading ElementaryGrading::analyze(const FiniteGroup& g, std::vector<Elem> vector) {
    if (vector.empty())
        throw Error(Errc::BadParameter, "grading vector must be nonempty");
    for (Elem x : vector)
        if (x < 0 || x >= g.order())
            throw Error(Errc::BadParameter, "grading entry out of range: " + std::to_string(x));
    std::vector<int> count(g.order(), 0);
    for (Elem x : vector)
        ++count[x];
    std::vector<Elem> bm;
    std::vector<int> mult;
    for (int x = 0; x < g.order(); ++x)
        if (count[x]) {
            bm.push_back(x);
            mult.push_back(count[x]);
        }
    std::vector<Elem> hb, hg;
    for (int x = 0; x < g.order(); ++x) {
        bool inB = true, keeps = true;
        for (Elem t : bm) {
            Elem y = g.mul(x, t);
            if (!count[y])
                inB = false;
            else if (count[y] != count[t])
                keeps = false;
        }
        if (inB) {
            hb.push_back(x);
            if (keeps)
                hg.push_back(x);
        }
    }
    std::vector<Elem> norm(vector.size());
    const Elem u = g.inv(vector[0]);
    for (std::size_t i = 0; i < vector.size(); ++i)
        norm[i] = g.mul(u, vector[i]);
    return ElementaryGrading(g, std::move(vector), std::move(norm), ElementSet(g, bm),
                             std::move(mult), ElementSet(g, hb, true), ElementSet(g, hg, true));
}

int ElementaryGrading::block_of(Elem t) const {
    const auto& b = B_.members();
    auto it = std::lower_bound(b.begin(), b.end(), t);
    return (it != b.end() && *it == t) ? static_cast<int>(it - b.begin()) : -1;
}

int ElementaryGrading::multiplicity(Elem t) const {
    int i = block_of(t);
    return i < 0 ? 0 : mult_[i];
}

int ElementaryGrading::sum_squares() const {
    int s = 0;
    for (int x : mult_)
        s += x * x;
    return s;
}

long component_dim(const ElementaryGrading& gr, Elem g) {
    const auto& G = gr.group();
    long c = 0;
    for (Elem a : gr.vector())
        for (Elem b : gr.vector())
            if (G.mul(G.inv(a), b) == g)
                ++c;
    return c;
}

FineGrading::FineGrading(FiniteGroup g, ElementSet h, std::optional<CocycleTable> cocycle)
    : g_(std::move(g)), h_(std::move(h)), mu_(std::move(cocycle)), pos_(g_.order(), -1) {
    if (!h_.check_subgroup())
        throw Error(Errc::NotASubgroup, "fine grading support must be a subgroup");
    h_ = ElementSet(g_, h_.members(), true);
    const auto& hm = h_.members();
    for (std::size_t i = 0; i < hm.size(); ++i)
        pos_[hm[i]] = static_cast<int>(i);
    if (!mu_)
        return;
    const std::size_t k = hm.size();
    if (mu_->size() != k)
        throw Error(Errc::BadCocycle, "cocycle table must be |H| x |H|");
    for (const auto& row : *mu_) {
        if (row.size() != k)
            throw Error(Errc::BadCocycle, "cocycle table must be |H| x |H|");
        for (const auto& v : row)
            if (v == 0)
                throw Error(Errc::BadCocycle, "cocycle values must be nonzero");
    }
    for (std::size_t a = 0; a < k; ++a)
        if ((*mu_)[0][a] != 1 || (*mu_)[a][0] != 1)
            throw Error(Errc::BadCocycle, "cocycle is not normalized at " + g_.label(hm[a]));
    for (Elem a : hm)
        for (Elem b : hm)
            for (Elem c : hm) {
                Rational l = mu(a, b) * mu(g_.mul(a, b), c);
                Rational r = mu(b, c) * mu(a, g_.mul(b, c));
                if (l != r)
                    throw Error(Errc::BadCocycle, "2-cocycle identity fails at (" +
                                                      g_.label(a) + ", " + g_.label(b) + ", " +
                                                      g_.label(c) + ")");
            }
}

Rational FineGrading::mu(Elem a, Elem b) const {
    if (!mu_)
        return 1;
    return (*mu_)[pos_[a]][pos_[b]];
}

CocycleTable sign_cocycle_c2xc2() {
    // element index 2*x1 + x2
    CocycleTable t(4, std::vector<Rational>(4, Rational(1)));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if ((x % 2) && (y / 2))
                t[x][y] = -1;
    return t;
}

GSimpleStructure GSimpleStructure::make(const FiniteGroup& g, const ElementSet& h,
                                        std::optional<CocycleTable> cocycle,
                                        std::vector<Elem> vector) {
    if (vector.empty())
        throw Error(Errc::BadParameter, "grading vector must be nonempty");
    for (Elem x : vector)
        if (x < 0 || x >= g.order())
            throw Error(Errc::BadParameter, "grading entry out of range: " + std::to_string(x));
    if (!h.check_subgroup())
        throw Error(Errc::NotASubgroup, "H must be a subgroup");
    // Validate the cocycle as given before conjugating.
    FineGrading original(g, ElementSet(g, h.members(), true), cocycle);

    // v -> u v with u = v_1^-1 keeps every degree v_i^-1 h v_j if H -> u H u^-1.
    const Elem u = g.inv(vector[0]);
    const Elem ui = vector[0];
    std::vector<Elem> norm(vector.size());
    for (std::size_t i = 0; i < vector.size(); ++i)
        norm[i] = g.mul(u, vector[i]);
    std::vector<Elem> conj;
    for (Elem x : h.members())
        conj.push_back(g.mul(g.mul(u, x), ui));
    ElementSet hc(g, conj, true);
    std::optional<CocycleTable> mu2;
    if (cocycle) {
        const auto& cm = hc.members();
        mu2 = CocycleTable(cm.size(), std::vector<Rational>(cm.size()));
        for (std::size_t a = 0; a < cm.size(); ++a)
            for (std::size_t b = 0; b < cm.size(); ++b)
                (*mu2)[a][b] = original.mu(g.mul(g.mul(ui, cm[a]), u), g.mul(g.mul(ui, cm[b]), u));
    }
    FineGrading fine(g, hc, mu2);

    std::vector<Elem> distinct = norm;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t a = 0; a < distinct.size(); ++a)
        for (std::size_t b = a + 1; b < distinct.size(); ++b)
            if (hc.contains(g.mul(distinct[a], g.inv(distinct[b]))))
                throw Error(Errc::CosetCollision,
                            "entries " + g.label(g.mul(ui, distinct[a])) + " and " +
                                g.label(g.mul(ui, distinct[b])) + " lie in the same H-coset");
    std::vector<int> mult;
    for (Elem d : distinct)
        mult.push_back(static_cast<int>(std::count(norm.begin(), norm.end(), d)));

    long dAe = 0;
    for (Elem a : norm)
        for (Elem b : norm)
            for (Elem x : hc.members())
                if (g.mul(g.mul(g.inv(a), x), b) == 0)
                    ++dAe;
    return GSimpleStructure(std::move(fine), std::move(vector), std::move(norm), std::move(mult),
                            dAe);
}

GSimpleStructure GSimpleStructure::from_elementary(const ElementaryGrading& gr) {
    return make(gr.group(), trivial_subgroup(gr.group()), std::nullopt, gr.vector());
}

GSimpleStructure GSimpleStructure::from_fine(const FineGrading& f) {
    return make(f.group(), f.subgroup(), f.cocycle(), {0});
}

long GSimpleStructure::component_dim(Elem g) const {
    const auto& G = group();
    long c = 0;
    for (Elem a : vec_)
        for (Elem b : vec_)
            for (Elem x : fine_.subgroup().members())
                if (G.mul(G.mul(G.inv(a), x), b) == g)
                    ++c;
    return c;
}

FingerprintResult weak_equivalence_fingerprint(const ElementaryGrading& a,
                                               const ElementaryGrading& b) {
    FingerprintResult res;
    const auto& G = a.group();
    if (G.order() != b.group().order()) {
        res.reason = "group orders differ";
        return res;
    }
    std::vector<long> da(G.order()), db(G.order());
    for (int x = 0; x < G.order(); ++x) {
        da[x] = component_dim(a, x);
        db[x] = component_dim(b, x);
    }
    std::map<long, int, std::greater<>> ca, cb;
    for (int x = 0; x < G.order(); ++x) {
        ++ca[da[x]];
        ++cb[db[x]];
    }
    std::map<long, int, std::greater<>> keys = ca;
    for (auto& [d, c] : cb)
        keys[d] += 0;
    for (const auto& [d, c] : keys) {
        (void)c;
        if (d == 0)
            continue;
        if (ca[d] != cb[d]) {
            res.reason = "component of dimension " + std::to_string(d) + " unmatched";
            return res;
        }
    }
    for (const auto& psi : automorphisms(G)) {
        bool ok = true;
        for (int x = 0; x < G.order() && ok; ++x)
            ok = da[x] == db[psi[x]];
        if (ok) {
            res.equivalent_possible = true;
            res.witness = psi;
            res.reason = "component dimensions match under automorphism";
            return res;
        }
    }
    res.reason = "no automorphism matches component dimensions";
    return res;
}

} // namespace gcodim
