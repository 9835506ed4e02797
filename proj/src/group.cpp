#include "gcodim/group.hpp"

#include "gcodim/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace gcodim {

struct FiniteGroup::Impl {
    int n = 0;
    std::vector<int> tab;  // n*n, row-major
    std::vector<int> inv;
    std::vector<std::string> labels;
    std::vector<int> relabel;
    std::string name;
    std::vector<std::vector<int>> rows;
};

namespace {

std::shared_ptr<FiniteGroup::Impl> build_impl(std::vector<std::vector<int>> table,
                                              std::vector<std::string> labels,
                                              std::string name, int cap) {
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw Error(Errc::BadParameter, "empty Cayley table");
    if (cap > 0 && n > cap)
        throw Error(Errc::BadParameter,
                    "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(Errc::BadParameter, "Cayley table is not square");
        for (int x : row)
            if (x < 0 || x >= n)
                throw Error(Errc::BadParameter, "table entry out of range: " + std::to_string(x));
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error(Errc::BadParameter, "label count does not match order");

    // Latin square: every row and column a permutation.
    for (int g = 0; g < n; ++g) {
        std::vector<char> seen_r(n, 0), seen_c(n, 0);
        for (int h = 0; h < n; ++h) {
            if (seen_r[table[g][h]]++)
                throw Error(Errc::NoInverse, "row of element " + std::to_string(g) +
                                                 " is not a permutation; element " +
                                                 std::to_string(g) + " has no inverse");
            if (seen_c[table[h][g]]++)
                throw Error(Errc::NoInverse, "column of element " + std::to_string(g) +
                                                 " is not a permutation; element " +
                                                 std::to_string(g) + " has no inverse");
        }
    }

    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int h = 0; h < n && ok; ++h)
            ok = table[e][h] == h && table[h][e] == h;
        if (ok)
            id = e;
    }
    if (id < 0)
        throw Error(Errc::NoIdentity, "no two-sided identity element");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(Errc::NotAssociative,
                                "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                    std::to_string(c) + " != " + std::to_string(a) + "*(" +
                                    std::to_string(b) + "*" + std::to_string(c) + ")");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[id]);  // perm: old -> new (an involution)

    auto p = std::make_shared<FiniteGroup::Impl>();
    p->n = n;
    p->tab.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            p->tab[perm[a] * n + perm[b]] = perm[table[a][b]];
    p->inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p->tab[a * n + b] == 0)
                p->inv[a] = b;
    for (int a = 0; a < n; ++a)
        if (p->inv[a] < 0 || p->tab[p->inv[a] * n + a] != 0)
            throw Error(Errc::NoInverse, "element " + std::to_string(perm[a]) +
                                             " has no two-sided inverse");
    if (labels.empty()) {
        labels.resize(n);
        for (int a = 0; a < n; ++a)
            labels[a] = std::to_string(a);
    }
    p->labels.resize(n);
    for (int a = 0; a < n; ++a)
        p->labels[perm[a]] = labels[a];
    p->relabel = perm;
    p->name = std::move(name);
    p->rows.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            p->rows[a][b] = p->tab[a * n + b];
    return p;
}

std::string cycle_label(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || p[i] == i)
            continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first)
                out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

} // namespace

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::vector<std::string> labels, int order_cap) {
    return FiniteGroup(build_impl(table, std::move(labels), "table", order_cap));
}

FiniteGroup FiniteGroup::trivial() {
    return FiniteGroup(build_impl({{0}}, {"e"}, "1", 0));
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1)
        throw Error(Errc::BadParameter, "cyclic order must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return FiniteGroup(build_impl(t, {}, "C" + std::to_string(n), 0));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1)
        throw Error(Errc::BadParameter, "dihedral parameter must be >= 1");
    const int N = 2 * n;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    // s^a r^i * s^b r^j = s^(a+b) r^((-1)^b i + j)
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int a = x / n, i = x % n, b = y / n, j = y % n;
            int ri = b ? (n - i) % n : i;
            t[x][y] = ((a + b) % 2) * n + (ri + j) % n;
        }
    std::vector<std::string> lab(N);
    for (int x = 0; x < N; ++x) {
        int a = x / n, i = x % n;
        std::string s = a ? "s" : "";
        if (i == 1)
            s += "r";
        else if (i > 1)
            s += "r" + std::to_string(i);
        lab[x] = s.empty() ? "e" : s;
    }
    return FiniteGroup(build_impl(t, lab, "D" + std::to_string(n), 0));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5)
        throw Error(Errc::BadParameter, "symmetric group supported for 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < perms.size(); ++k)
        index[perms[k]] = static_cast<int>(k);
    const int N = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    std::vector<int> c(n);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            for (int x = 0; x < n; ++x)
                c[x] = perms[a][perms[b][x]];
            t[a][b] = index[c];
        }
    std::vector<std::string> lab(N);
    for (int a = 0; a < N; ++a)
        lab[a] = cycle_label(perms[a]);
    return FiniteGroup(build_impl(t, lab, "S" + std::to_string(n), 0));
}

FiniteGroup FiniteGroup::quaternion8() {
    // unit products among 1,i,j,k as (sign, unit)
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int s = (x >= 4 ? -1 : 1) * (y >= 4 ? -1 : 1) * sgn[x % 4][y % 4];
            t[x][y] = unit[x % 4][y % 4] + (s < 0 ? 4 : 0);
        }
    return FiniteGroup(build_impl(t, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"}, "Q8", 0));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int a = g.order(), b = h.order(), N = a * b;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            t[x][y] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
    std::vector<std::string> lab(N);
    for (int x = 0; x < N; ++x)
        lab[x] = "(" + g.label(x / b) + "," + h.label(x % b) + ")";
    return FiniteGroup(build_impl(t, lab, g.name() + "x" + h.name(), 0));
}

FiniteGroup FiniteGroup::builtin(const std::string& raw) {
    std::string name;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            name += ch;
    auto x = name.find_first_of("x");
    if (x != std::string::npos)
        return direct_product(builtin(name.substr(0, x)), builtin(name.substr(x + 1)));
    if (name == "1" || name == "trivial")
        return trivial();
    if (name == "Q8")
        return quaternion8();
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D' || name[0] == 'S' ||
                             name[0] == 'Z')) {
        const std::string digits = name.substr(1);
        if (!std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            digits.size() > 4)
            throw Error(Errc::UnknownName, "unknown group name: " + raw);
        int n = std::stoi(digits);
        switch (name[0]) {
        case 'C':
        case 'Z': return cyclic(n);
        case 'D': return dihedral(n);
        default: return symmetric(n);
        }
    }
    throw Error(Errc::UnknownName, "unknown group name: " + raw);
}

int FiniteGroup::order() const { return p_->n; }
Elem FiniteGroup::mul(Elem a, Elem b) const { return p_->tab[a * p_->n + b]; }
Elem FiniteGroup::inv(Elem a) const { return p_->inv[a]; }

Elem FiniteGroup::product(const std::vector<Elem>& xs) const {
    Elem r = 0;
    for (Elem x : xs)
        r = mul(r, x);
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < p_->n; ++a)
        for (int b = a + 1; b < p_->n; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

const std::string& FiniteGroup::label(Elem a) const { return p_->labels.at(a); }
const std::vector<std::string>& FiniteGroup::labels() const { return p_->labels; }
const std::vector<int>& FiniteGroup::relabeling() const { return p_->relabel; }
const std::string& FiniteGroup::name() const { return p_->name; }
const std::vector<std::vector<int>>& FiniteGroup::table() const { return p_->rows; }

std::optional<Elem> FiniteGroup::find(const std::string& label) const {
    for (int a = 0; a < p_->n; ++a)
        if (p_->labels[a] == label)
            return a;
    if (label == "e")
        return 0;
    if (!label.empty() && label.size() < 6 &&
        std::all_of(label.begin(), label.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int v = std::stoi(label);
        if (v < p_->n)
            return p_->relabel[v];
    }
    return std::nullopt;
}

bool FiniteGroup::operator==(const FiniteGroup& o) const {
    return p_ == o.p_ || (p_->n == o.p_->n && p_->tab == o.p_->tab);
}

ElementSet::ElementSet(FiniteGroup g, std::vector<Elem> members, bool subgroup)
    : g_(std::move(g)), m_(std::move(members)), subgroup_(subgroup) {
    std::sort(m_.begin(), m_.end());
    m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
    for (Elem x : m_)
        if (x < 0 || x >= g_.order())
            throw Error(Errc::BadParameter, "element out of range: " + std::to_string(x));
}

bool ElementSet::contains(Elem x) const { return std::binary_search(m_.begin(), m_.end(), x); }

bool ElementSet::check_subgroup() const {
    if (!contains(0))
        return false;
    for (Elem a : m_) {
        if (!contains(g_.inv(a)))
            return false;
        for (Elem b : m_)
            if (!contains(g_.mul(a, b)))
                return false;
    }
    return true;
}

FiniteGroup ElementSet::as_group() const {
    if (!check_subgroup())
        throw Error(Errc::NotASubgroup, "set is not a subgroup");
    const int k = static_cast<int>(m_.size());
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    std::vector<std::string> lab(k);
    for (int a = 0; a < k; ++a) {
        lab[a] = g_.label(m_[a]);
        for (int b = 0; b < k; ++b)
            t[a][b] = static_cast<int>(std::lower_bound(m_.begin(), m_.end(),
                                                        g_.mul(m_[a], m_[b])) -
                                       m_.begin());
    }
    return FiniteGroup::from_cayley_table(t, lab, 0);
}

ElementSet whole_group(const FiniteGroup& g) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return ElementSet(g, all, true);
}

ElementSet trivial_subgroup(const FiniteGroup& g) { return ElementSet(g, {0}, true); }

ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<Elem> out{0}, stack{0};
    in[0] = 1;
    while (!stack.empty()) {
        Elem x = stack.back();
        stack.pop_back();
        for (Elem s : gens) {
            Elem y = g.mul(x, s);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
                stack.push_back(y);
            }
        }
    }
    return ElementSet(g, out, true);
}

ElementSet make_subgroup(const FiniteGroup& g, std::vector<Elem> members) {
    ElementSet s(g, std::move(members), false);
    if (!s.check_subgroup())
        throw Error(Errc::NotASubgroup, "given elements do not form a subgroup");
    return ElementSet(g, s.members(), true);
}

ElementSet commutator_subgroup(const FiniteGroup& g) {
    std::vector<Elem> comms;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(g, comms);
}

ElementSet sigma_set(const FiniteGroup& g, const std::vector<Elem>& h) {
    if (h.empty())
        return ElementSet(g, {0});
    std::vector<Elem> s = h;
    std::sort(s.begin(), s.end());
    std::vector<char> hit(g.order(), 0);
    if (s.size() <= 8) {
        do
            hit[g.product(s)] = 1;
        while (std::next_permutation(s.begin(), s.end()));
    } else {
        // States (remaining multiplicities, product so far); the reachable set
        // depends only on the state, so each is expanded once.
        std::vector<Elem> vals = s;
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        std::vector<int> cnt(vals.size(), 0);
        for (Elem x : s)
            ++cnt[std::lower_bound(vals.begin(), vals.end(), x) - vals.begin()];
        std::set<std::pair<std::vector<int>, Elem>> seen;
        std::vector<std::pair<std::vector<int>, Elem>> stack{{cnt, 0}};
        seen.insert(stack.back());
        while (!stack.empty()) {
            auto [c, p] = stack.back();
            stack.pop_back();
            bool empty = true;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (!c[i])
                    continue;
                empty = false;
                auto nc = c;
                --nc[i];
                std::pair<std::vector<int>, Elem> st{nc, g.mul(p, vals[i])};
                if (seen.insert(st).second)
                    stack.push_back(std::move(st));
            }
            if (empty)
                hit[p] = 1;
        }
    }
    std::vector<Elem> out;
    for (int x = 0; x < g.order(); ++x)
        if (hit[x])
            out.push_back(x);
    return ElementSet(g, out);
}

CommutatorTuple find_commutator_tuple(const FiniteGroup& g, int max_len) {
    const ElementSet target = commutator_subgroup(g);
    if (target.size() == 1)
        return {0, {}};
    const int n = g.order();
    // sigma_set depends on the multiset only, and the lex-least arrangement
    // of a multiset is its sorted one, so nondecreasing tuples suffice.
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Elem> t(len, 0);
        while (true) {
            if (sigma_set(g, t).members() == target.members())
                return {len, t};
            int i = len - 1;
            while (i >= 0 && t[i] == n - 1)
                --i;
            if (i < 0)
                break;
            ++t[i];
            for (int j = i + 1; j < len; ++j)
                t[j] = t[i];
        }
    }
    throw Error(Errc::NotFoundWithinBound,
                "no tuple of length <= " + std::to_string(max_len) + " found");
}

std::vector<Elem> left_coset_reps(const FiniteGroup& g, const ElementSet& h) {
    if (!h.check_subgroup())
        throw Error(Errc::NotASubgroup, "coset representatives need a subgroup");
    std::vector<char> covered(g.order(), 0);
    std::vector<Elem> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (covered[x])
            continue;
        reps.push_back(x);
        for (Elem y : h.members())
            covered[g.mul(x, y)] = 1;
    }
    return reps;
}

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g) {
    const int n = g.order();
    if (n > 24)
        throw Error(Errc::CapExceeded, "automorphism search capped at order 24");
    std::vector<int> ord(n);
    for (int x = 0; x < n; ++x) {
        int k = 1;
        Elem y = x;
        while (y != 0) {
            y = g.mul(y, x);
            ++k;
        }
        ord[x] = x == 0 ? 1 : k - 1;
    }

    // Greedy generating set.
    std::vector<Elem> gens;
    std::vector<Elem> span = generated_subgroup(g, gens).members();
    for (int x = 1; x < n && static_cast<int>(span.size()) < n; ++x)
        if (!std::binary_search(span.begin(), span.end(), x)) {
            gens.push_back(x);
            span = generated_subgroup(g, gens).members();
        }

    std::vector<std::vector<Elem>> result;
    std::vector<Elem> img(gens.size(), 0);
    std::vector<std::vector<Elem>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int y = 0; y < n; ++y)
            if (ord[y] == ord[gens[i]])
                cands[i].push_back(y);

    std::vector<std::size_t> pos(gens.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            img[i] = cands[i][pos[i]];
        // Extend along words in the generators.
        std::vector<Elem> phi(n, -1);
        phi[0] = 0;
        std::vector<Elem> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            Elem x = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < gens.size() && ok; ++i) {
                Elem y = g.mul(x, gens[i]);
                Elem v = g.mul(phi[x], img[i]);
                if (phi[y] < 0) {
                    phi[y] = v;
                    stack.push_back(y);
                } else if (phi[y] != v) {
                    ok = false;
                }
            }
        }
        if (ok) {
            std::vector<char> hit(n, 0);
            for (int x = 0; x < n && ok; ++x) {
                if (phi[x] < 0 || hit[phi[x]])
                    ok = false;
                else
                    hit[phi[x]] = 1;
            }
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    ok = phi[g.mul(a, b)] == g.mul(phi[a], phi[b]);
        }
        if (ok)
            result.push_back(phi);
        std::size_t i = 0;
        while (i < gens.size() && ++pos[i] == cands[i].size()) {
            pos[i] = 0;
            ++i;
        }
        if (i == gens.size())
            break;
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace gcodim
