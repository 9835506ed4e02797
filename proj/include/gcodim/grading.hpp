#pragma once

#include "gcodim/group.hpp"
#include "gcodim/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcodim {

/// Elementary grading of M_m given by a vector in G^m. B, H_B and H_g are
/// computed on the vector as given (no translation).
class ElementaryGrading {
public:
    static ElementaryGrading analyze(const FiniteGroup& g, std::vector<Elem> vector);

    const FiniteGroup& group() const { return g_; }
    const std::vector<Elem>& vector() const { return vec_; }
    /// Left-translated so the first entry is e.
    const std::vector<Elem>& normalized_vector() const { return norm_; }
    const ElementSet& B() const { return B_; }
    /// Multiplicities aligned with B().members().
    const std::vector<int>& mults() const { return mult_; }
    int multiplicity(Elem t) const;
    int k() const { return static_cast<int>(mult_.size()); }
    int m() const { return static_cast<int>(vec_.size()); }
    const ElementSet& H_B() const { return HB_; }
    const ElementSet& H_g() const { return Hg_; }
    /// Position of t in B().members(), or -1.
    int block_of(Elem t) const;
    /// Sum of squared multiplicities (dim A_e).
    int sum_squares() const;

private:
    ElementaryGrading(FiniteGroup g, std::vector<Elem> v, std::vector<Elem> norm, ElementSet B,
                      std::vector<int> mult, ElementSet HB, ElementSet Hg)
        : g_(std::move(g)), vec_(std::move(v)), norm_(std::move(norm)), B_(std::move(B)),
          mult_(std::move(mult)), HB_(std::move(HB)), Hg_(std::move(Hg)) {}

    FiniteGroup g_;
    std::vector<Elem> vec_, norm_;
    ElementSet B_;
    std::vector<int> mult_;
    ElementSet HB_, Hg_;
};

/// #{(i,j) : v_i^-1 v_j = g}
long component_dim(const ElementaryGrading& gr, Elem g);

using CocycleTable = std::vector<std::vector<Rational>>;

/// Twisted group algebra data: subgroup H of G plus an optional normalized
/// 2-cocycle, indexed by position in H.members().
class FineGrading {
public:
    FineGrading(FiniteGroup g, ElementSet h, std::optional<CocycleTable> cocycle = std::nullopt);

    const FiniteGroup& group() const { return g_; }
    const ElementSet& subgroup() const { return h_; }
    const std::optional<CocycleTable>& cocycle() const { return mu_; }
    /// mu(a, b) for a, b in H (group indices); 1 without a cocycle.
    Rational mu(Elem a, Elem b) const;

private:
    FiniteGroup g_;
    ElementSet h_;
    std::optional<CocycleTable> mu_;
    std::vector<int> pos_;
};

/// Sign cocycle on C2xC2: mu(x, y) = (-1)^(x2*y1).
CocycleTable sign_cocycle_c2xc2();

/// F^mu H tensor M_m with elementary part given by a vector. Stored with the
/// first entry translated to e; H and mu are conjugated to match.
class GSimpleStructure {
public:
    static GSimpleStructure make(const FiniteGroup& g, const ElementSet& h,
                                 std::optional<CocycleTable> cocycle, std::vector<Elem> vector);
    static GSimpleStructure from_elementary(const ElementaryGrading& gr);
    static GSimpleStructure from_fine(const FineGrading& f);

    const FiniteGroup& group() const { return fine_.group(); }
    const FineGrading& fine() const { return fine_; }
    const std::vector<Elem>& raw_vector() const { return raw_; }
    const std::vector<Elem>& vector() const { return vec_; }
    int m() const { return static_cast<int>(vec_.size()); }
    int h_order() const { return static_cast<int>(fine_.subgroup().size()); }
    /// Multiplicities of the distinct entries of vector(), sorted by element.
    const std::vector<int>& mults() const { return mult_; }
    long dim_A() const { return static_cast<long>(h_order()) * m() * m(); }
    long dim_Ae() const { return dim_Ae_; }
    /// #{(h, i, j) : v_i^-1 h v_j = g}
    long component_dim(Elem g) const;

private:
    GSimpleStructure(FineGrading f, std::vector<Elem> raw, std::vector<Elem> v,
                     std::vector<int> mult, long dAe)
        : fine_(std::move(f)), raw_(std::move(raw)), vec_(std::move(v)), mult_(std::move(mult)),
          dim_Ae_(dAe) {}

    FineGrading fine_;
    std::vector<Elem> raw_, vec_;
    std::vector<int> mult_;
    long dim_Ae_;
};

struct FingerprintResult {
    bool equivalent_possible = false;
    std::optional<std::vector<Elem>> witness;
    std::string reason;
};

/// Necessary condition for graded equivalence: an automorphism psi with
/// dim A_g = dim B_psi(g) for every g.
FingerprintResult weak_equivalence_fingerprint(const ElementaryGrading& a,
                                               const ElementaryGrading& b);

} // namespace gcodim
