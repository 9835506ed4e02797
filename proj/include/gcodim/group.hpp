#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gcodim {

using Elem = int;

/// Finite group given by its Cayley table; index 0 is always the identity.
class FiniteGroup {
public:
    static constexpr int default_order_cap = 64;

    /// Validates the table. If the identity is not at index 0 it is swapped
    /// there; relabeling() maps input index -> stored index.
    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                         std::vector<std::string> labels = {},
                                         int order_cap = default_order_cap);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    /// Order 2n. Element j*n+i is s^j r^i.
    static FiniteGroup dihedral(int n);
    /// Permutations of {1..n} in lex order; (gh)(x) = g(h(x)).
    static FiniteGroup symmetric(int n);
    /// 0..3 = 1,i,j,k; 4..7 = their negatives.
    static FiniteGroup quaternion8();
    /// Element a*|h| + b is (a, b).
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
    /// "C<n>", "D<n>", "S<n>", "Q8", "1", and products "AxB".
    static FiniteGroup builtin(const std::string& name);

    int order() const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem identity() const { return 0; }
    Elem product(const std::vector<Elem>& xs) const;
    bool is_abelian() const;
    const std::string& label(Elem a) const;
    const std::vector<std::string>& labels() const;
    /// Index of a label, or of a decimal index string.
    std::optional<Elem> find(const std::string& label) const;
    const std::vector<int>& relabeling() const;
    const std::string& name() const;
    const std::vector<std::vector<int>>& table() const;

    bool operator==(const FiniteGroup& o) const;

    struct Impl;

private:
    explicit FiniteGroup(std::shared_ptr<const Impl> p) : p_(std::move(p)) {}
    std::shared_ptr<const Impl> p_;
};

/// Sorted subset of a group; optionally known to be a subgroup.
class ElementSet {
public:
    ElementSet(FiniteGroup g, std::vector<Elem> members, bool subgroup = false);

    const FiniteGroup& group() const { return g_; }
    const std::vector<Elem>& members() const { return m_; }
    std::size_t size() const { return m_.size(); }
    bool contains(Elem x) const;
    bool is_subgroup() const { return subgroup_; }
    /// Closure check; does not rely on the flag.
    bool check_subgroup() const;
    /// Subgroup re-indexed as a group of its own (position in members()).
    FiniteGroup as_group() const;
    bool operator==(const ElementSet& o) const { return m_ == o.m_; }

private:
    FiniteGroup g_;
    std::vector<Elem> m_;
    bool subgroup_;
};

ElementSet whole_group(const FiniteGroup& g);
ElementSet trivial_subgroup(const FiniteGroup& g);
/// Subgroup generated by the given elements.
ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens);
/// Throws NotASubgroup if the members do not form a subgroup.
ElementSet make_subgroup(const FiniteGroup& g, std::vector<Elem> members);

ElementSet commutator_subgroup(const FiniteGroup& g);
/// {h_s(1)...h_s(k) : s in S_k}; {e} for the empty tuple.
ElementSet sigma_set(const FiniteGroup& g, const std::vector<Elem>& h);

struct CommutatorTuple {
    int n0;
    std::vector<Elem> h0;
};
/// Shortest tuple (then lex smallest) whose sigma_set is the commutator subgroup.
CommutatorTuple find_commutator_tuple(const FiniteGroup& g, int max_len);

/// Smallest element of each left coset gH, sorted.
std::vector<Elem> left_coset_reps(const FiniteGroup& g, const ElementSet& h);

/// All automorphisms as image tables; requires order <= 24.
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g);

} // namespace gcodim
