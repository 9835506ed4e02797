#pragma once

#include "gcodim/grading.hpp"
#include "gcodim/numeric.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gcodim {

using Structure = std::variant<ElementaryGrading, FineGrading, GSimpleStructure>;

/// (1/|H_g|) * sum over compositions n_1+..+n_k = n of multinomial^2 * prod t_{n_i}(m_i).
BigInt t_graded(const ElementaryGrading& gr, int n);

/// Undivided sum (equals the span dimension of the unfolded operators).
BigInt t_graded_unfolded(const ElementaryGrading& gr, int n);

/// multinomial(n; counts)^2 * prod t_{counts_i}(m_i); counts aligned with B.
BigInt per_multiplicity_dim(const ElementaryGrading& gr, const std::vector<int>& counts);

/// |H'| * |H|^(n-1)
BigInt fine_invariant_count(const FiniteGroup& h, int n);

struct TaggedValue {
    BigInt value;
    std::string tag;
};

inline constexpr const char* proxy_tag = "asymptotic proxy, not exact c_n";

/// t_{n+1} (elementary) or fine_invariant_count(n+1) (fine), tagged as a proxy.
TaggedValue codim_proxy(const Structure& s, int n);

/// Test hook: when set, t_graded returns a value off by one.
void set_t_graded_fault(bool on);

} // namespace gcodim
