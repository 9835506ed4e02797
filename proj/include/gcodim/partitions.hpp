#pragma once

#include "gcodim/numeric.hpp"

#include <string>
#include <vector>

namespace gcodim {

/// Weakly decreasing positive parts; empty allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    /// Throws BadParameter if not weakly decreasing and positive.
    explicit Partition(std::vector<int> p);

    int n() const;
    int height() const { return static_cast<int>(parts.size()); }
    std::string str() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// All partitions of n with at most max_height parts, descending lex order.
std::vector<Partition> partitions(int n, int max_height);

/// Hook length formula.
BigInt sn_dim(const Partition& lambda);

/// Sum of d_lambda^2 over partitions of n with height <= m; t_0(m) = 1.
BigInt t_ungraded(int n, int m);

/// Sum over semistandard tableaux of shape lambda, entries in [1, values.size()],
/// of the product of values[entry].
Rational schur_eval(const Partition& lambda, const std::vector<Rational>& values);

/// Irreducible character chi_lambda at a class of the given cycle type.
BigInt sn_character_value(const Partition& lambda, const Partition& cycle_type);

/// Size of the conjugacy class with the given cycle type.
BigInt class_size(const Partition& cycle_type);

/// Cycle type of a permutation of {0..n-1}, parts sorted decreasing.
Partition cycle_type_of(const std::vector<int>& perm);

} // namespace gcodim
