#pragma once

#include "gcodim/error.hpp"
#include "gcodim/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gcodim {

/// Sparse vector over opaque comparable labels. Call finalize() after add().
template <class Label>
struct SparseVec {
    std::vector<std::pair<Label, Rational>> entries;

    void add(const Label& l, const Rational& c) { entries.emplace_back(l, c); }

    /// Sort by label, merge duplicates, drop zeros.
    void finalize() {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<Label, Rational>> out;
        out.reserve(entries.size());
        for (auto& e : entries) {
            if (!out.empty() && !(out.back().first < e.first))
                out.back().second += e.second;
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [](const auto& e) { return e.second == 0; });
        entries.swap(out);
    }

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    bool operator==(const SparseVec& o) const { return entries == o.entries; }
};

enum class RankMode { Exact, Modular };

struct RankOptions {
    RankMode mode = RankMode::Modular;
    std::uint64_t prime = (std::uint64_t{1} << 61) - 1;
};

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }
/// Image of a rational in F_p; throws EmptyUniverse if p divides the denominator.
std::uint64_t from_rational(const Rational& q, std::uint64_t p);
/// Symmetric lift to (-p/2, p/2].
long long lift(std::uint64_t a, std::uint64_t p);

} // namespace modp

using Col = std::int64_t;
using ModRow = std::vector<std::pair<Col, std::uint64_t>>;
using IntRow = std::vector<std::pair<Col, BigInt>>;

/// Incremental row echelon form over F_p on integer column indices.
class ModularEchelon {
public:
    explicit ModularEchelon(std::uint64_t prime = (std::uint64_t{1} << 61) - 1) : p_(prime) {}
    /// Rows must be sorted by column with no zero entries. Returns true if the
    /// row was independent of those already added.
    bool add(ModRow row);
    std::size_t rank() const { return pivots_.size(); }
    /// Leading columns, sorted.
    std::vector<Col> pivot_columns() const;
    std::uint64_t prime() const { return p_; }

private:
    std::uint64_t p_;
    std::map<Col, ModRow> pivots_;
};

/// Incremental fraction-free echelon form over Z (rows kept primitive).
class IntegerEchelon {
public:
    bool add(IntRow row);
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<Col, IntRow> pivots_;
};

/// Maps labels to dense column indices.
template <class Label>
class LabelIndex {
public:
    void collect(const SparseVec<Label>& v) {
        for (const auto& e : v.entries)
            labels_.push_back(e.first);
    }
    void seal() {
        std::sort(labels_.begin(), labels_.end());
        labels_.erase(std::unique(labels_.begin(), labels_.end(),
                                  [](const Label& a, const Label& b) {
                                      return !(a < b) && !(b < a);
                                  }),
                      labels_.end());
    }
    int at(const Label& l) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || l < *it)
            return -1;
        return static_cast<int>(it - labels_.begin());
    }
    std::size_t size() const { return labels_.size(); }

private:
    std::vector<Label> labels_;
};

template <class Label>
void check_canonical(const SparseVec<Label>& v) {
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
        if (v.entries[i].second == 0)
            throw Error(Errc::EmptyUniverse, "stored zero coefficient");
        if (i && !(v.entries[i - 1].first < v.entries[i].first))
            throw Error(Errc::EmptyUniverse, "labels not strictly increasing within a vector");
    }
}

template <class Label>
ModRow to_mod_row(const SparseVec<Label>& v, const LabelIndex<Label>& idx, std::uint64_t p) {
    ModRow r;
    r.reserve(v.size());
    for (const auto& [l, c] : v.entries) {
        std::uint64_t x = modp::from_rational(c, p);
        if (x)
            r.emplace_back(idx.at(l), x);
    }
    std::sort(r.begin(), r.end());
    return r;
}

IntRow to_int_row(const std::vector<std::pair<Col, Rational>>& v);

/// Rank of a family of sparse vectors over Q (exact) or F_p (modular).
template <class Label>
std::size_t rank(std::span<const SparseVec<Label>> vecs, const RankOptions& opt = {}) {
    LabelIndex<Label> idx;
    for (const auto& v : vecs) {
        check_canonical(v);
        idx.collect(v);
    }
    idx.seal();
    if (opt.mode == RankMode::Modular) {
        ModularEchelon ech(opt.prime);
        for (const auto& v : vecs)
            ech.add(to_mod_row(v, idx, opt.prime));
        return ech.rank();
    }
    IntegerEchelon ech;
    for (const auto& v : vecs) {
        std::vector<std::pair<Col, Rational>> r;
        for (const auto& [l, c] : v.entries)
            r.emplace_back(idx.at(l), c);
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.add(to_int_row(r));
    }
    return ech.rank();
}

template <class Label>
std::size_t rank(const std::vector<SparseVec<Label>>& vecs, const RankOptions& opt = {}) {
    return rank(std::span<const SparseVec<Label>>(vecs.data(), vecs.size()), opt);
}

/// Rank of vectors fed one at a time; labels are used directly as columns
/// (must be below 2^63).
class StreamingRank {
public:
    explicit StreamingRank(const RankOptions& opt = {}) : opt_(opt), mod_(opt.prime) {}

    /// Returns true if v was independent of the vectors added so far.
    bool add(const SparseVec<std::uint64_t>& v) {
        if (opt_.mode == RankMode::Modular) {
            ModRow r;
            r.reserve(v.size());
            for (const auto& [l, c] : v.entries) {
                std::uint64_t x = modp::from_rational(c, opt_.prime);
                if (x)
                    r.emplace_back(static_cast<Col>(l), x);
            }
            return mod_.add(std::move(r));
        }
        std::vector<std::pair<Col, Rational>> r;
        r.reserve(v.size());
        for (const auto& [l, c] : v.entries)
            r.emplace_back(static_cast<Col>(l), c);
        return int_.add(to_int_row(r));
    }
    std::size_t rank() const {
        return opt_.mode == RankMode::Modular ? mod_.rank() : int_.rank();
    }

private:
    RankOptions opt_;
    ModularEchelon mod_;
    IntegerEchelon int_;
};

/// Inverse of a dense square matrix over F_p; throws BadParameter if singular.
std::vector<std::vector<std::uint64_t>> mod_inverse(std::vector<std::vector<std::uint64_t>> a,
                                                    std::uint64_t p);

} // namespace gcodim
