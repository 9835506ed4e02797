#pragma once

#include "gcodim/grading.hpp"
#include "gcodim/linalg.hpp"
#include "gcodim/partitions.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace gcodim {

/// Limits for the brute-force oracles. Exceeding one raises CapExceeded.
struct OracleCaps {
    int max_n = 5;                       // invariant-space oracles
    std::uint64_t max_tensor_dim = 100000;  // m^n
    int codim_max_m = 3;
    int codim_max_n_m3 = 4;              // n cap when m >= 3
    int codim_max_n_small = 5;           // n cap when m <= 2
    int codim_max_group = 6;
    int sn_max_n = 6;
    RankOptions rank{};
    unsigned jobs = 0;                   // 0: hardware concurrency

    int codim_max_n(int m) const { return m >= 3 ? codim_max_n_m3 : codim_max_n_small; }
};

/// Runs body(i) for i in [0, count) on up to jobs threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

using Perm = std::vector<int>;  // 0-based; position p of the output takes input factor perm[p]

/// All permutations of {0..n-1} in lex order.
std::vector<Perm> all_perms(int n);
bool is_n_cycle(const Perm& p);

/// Operator label: permutation and an H_g-orbit-canonical type vector.
struct TOpLabel {
    Perm sigma;
    std::vector<Elem> h;
    bool operator==(const TOpLabel& o) const { return sigma == o.sigma && h == o.h; }
};

/// Lex-least element of {g h : g in H_g}.
std::vector<Elem> orbit_canonical(const ElementaryGrading& gr, const std::vector<Elem>& h);
TOpLabel make_top_label(const ElementaryGrading& gr, Perm sigma, const std::vector<Elem>& h);

using OpVec = SparseVec<std::uint64_t>;  // label = input_code * m^n + output_code

/// Matrix of T'_{sigma,h} on V^{⊗n}.
OpVec t_prime_vector(const ElementaryGrading& gr, const Perm& sigma, const std::vector<Elem>& h);
/// Matrix of T_{sigma,h} = sum over g in H_g of T'_{sigma, g h}.
OpVec t_op_vector(const ElementaryGrading& gr, const TOpLabel& label, int n);

/// Apply a tensor-position permutation to every matrix entry (conjugation).
OpVec conjugate_positions(const OpVec& v, const Perm& tau, int m, int n);

struct InvariantFilter {
    enum class Kind { All, NCyclesOnly, Multiplicity } kind = Kind::All;
    std::vector<int> counts;  // aligned with B members
    bool unfolded = true;     // Multiplicity: use T' operators

    static InvariantFilter all() { return {}; }
    static InvariantFilter n_cycles_only() { return {Kind::NCyclesOnly, {}, true}; }
    static InvariantFilter multiplicity(std::vector<int> c, bool unfolded = true) {
        return {Kind::Multiplicity, std::move(c), unfolded};
    }
};

std::size_t invariant_dim_bruteforce(const ElementaryGrading& gr, int n,
                                     const InvariantFilter& filter = InvariantFilter::all(),
                                     const OracleCaps& caps = {});

using MonoVec = SparseVec<std::uint64_t>;

/// Product U_{g_s(1)}^{(s(1))} ... U_{g_s(n)}^{(s(n))} of generic homogeneous
/// elements; label = monomial_code * dim A + result basis index.
MonoVec graded_monomial_vector(const GSimpleStructure& s, const std::vector<Elem>& degrees,
                               const Perm& sigma);
/// Trace of the same product; label = monomial_code.
MonoVec graded_trace_vector(const GSimpleStructure& s, const std::vector<Elem>& degrees,
                            const Perm& sigma);

BigInt codim_bruteforce(const GSimpleStructure& s, int n, const OracleCaps& caps = {});
BigInt trace_space_dim(const GSimpleStructure& s, int n, const OracleCaps& caps = {});

struct SnComponent {
    Partition lambda;
    BigInt multiplicity;
};

/// Decomposition of the span of the T operators under position permutation.
std::vector<SnComponent> sn_module_decomposition(const ElementaryGrading& gr, int n,
                                                 const OracleCaps& caps = {});

bool is_complete(const std::vector<Elem>& h, const ElementaryGrading& gr);
bool is_in_order(const std::vector<Elem>& h, const ElementaryGrading& gr);

/// #{(h_1..h_n) in H^n : h_1...h_n in H'} by dynamic programming.
BigInt fine_invariant_dim_bruteforce(const FiniteGroup& h, int n);

} // namespace gcodim
