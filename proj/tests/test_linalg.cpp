#include <doctest.h>

#include "gcodim/linalg.hpp"

#include <random>

using namespace gcodim;

namespace {

// Dense Gaussian elimination over Q.
std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c] != 0) {
                Rational f = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] -= f * a[r][j];
            }
        ++r;
    }
    return r;
}

SparseVec<int> sparse(const std::vector<Rational>& d) {
    SparseVec<int> v;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0)
            v.add(static_cast<int>(i), d[i]);
    v.finalize();
    return v;
}

} // namespace

TEST_CASE("trivial rank cases") {
    std::vector<SparseVec<int>> none;
    CHECK(rank(none) == 0);
    auto v = sparse({1, 2, 0, 3});
    auto v2 = sparse({2, 4, 0, 6});
    std::vector<SparseVec<int>> vs{v, v2, v};
    CHECK(rank(vs) == 1);
    CHECK(rank(vs, {RankMode::Exact}) == 1);
}

TEST_CASE("rank agrees with dense rational elimination") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3), den(1, 4), pick(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + trial % 7, cols = 2 + trial % 5;
        std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
        for (auto& row : dense)
            for (auto& x : row)
                if (pick(rng) == 0) {
                    x = Rational(coef(rng), den(rng));
                    x.canonicalize();
                }
        // make some rows combinations of others
        if (rows >= 3)
            for (int j = 0; j < cols; ++j)
                dense[2][j] = dense[0][j] * Rational(1, 2) - dense[1][j] * 3;
        std::vector<SparseVec<int>> vs;
        for (const auto& row : dense)
            vs.push_back(sparse(row));
        const auto want = dense_rank(dense);
        CHECK(rank(vs, {RankMode::Exact}) == want);
        CHECK(rank(vs, {RankMode::Modular}) == want);
    }
}

TEST_CASE("general position") {
    // rows of a Vandermonde matrix are independent
    std::vector<SparseVec<int>> vs;
    for (int x : {2, 3, 5})
        vs.push_back(sparse({1, x, x * x, x * x * x, x * x * x * x}));
    CHECK(rank(vs, {RankMode::Exact}) == 3);
    CHECK(rank(vs) == 3);
}

TEST_CASE("rank invariances") {
    std::vector<SparseVec<int>> vs{sparse({1, 0, 2}), sparse({0, 1, 1}), sparse({1, 1, 3})};
    CHECK(rank(vs, {RankMode::Exact}) == 2);
    std::vector<SparseVec<int>> scaled{sparse({Rational(-7, 2), 0, -7}), sparse({0, 5, 5}),
                                       sparse({1, 1, 3})};
    CHECK(rank(scaled, {RankMode::Exact}) == 2);
    std::swap(scaled[0], scaled[2]);
    CHECK(rank(scaled) == 2);
}

TEST_CASE("small modulus shows modular rank can drop") {
    // det = 7: independent over Q, dependent mod 7
    std::vector<SparseVec<int>> vs{sparse({1, 2}), sparse({3, 13})};
    CHECK(rank(vs, {RankMode::Exact}) == 2);
    CHECK(rank(vs, {RankMode::Modular, 7}) == 1);
}

TEST_CASE("non-canonical vectors are rejected") {
    SparseVec<int> v;
    v.add(1, 1);
    v.add(0, 1);
    std::vector<SparseVec<int>> vs{v};
    CHECK_THROWS_AS(rank(vs), Error);
}

TEST_CASE("streaming rank") {
    StreamingRank sr;
    SparseVec<std::uint64_t> a, b;
    a.add(3, 1);
    a.add(10, 2);
    b.add(3, 2);
    b.add(10, 4);
    CHECK(sr.add(a));
    CHECK_FALSE(sr.add(b));
    CHECK(sr.rank() == 1);
}

TEST_CASE("modular helpers") {
    const std::uint64_t p = 1000003;
    CHECK(modp::mul(modp::inv(12345, p), 12345, p) == 1);
    CHECK(modp::lift(modp::from_rational(Rational(-5), p), p) == -5);
    CHECK(modp::from_rational(Rational(1, 2), p) == (p + 1) / 2);
}
