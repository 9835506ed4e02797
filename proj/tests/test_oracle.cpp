#include <doctest.h>

#include "gcodim/codim.hpp"
#include "gcodim/error.hpp"
#include "gcodim/oracle.hpp"

#include <atomic>

using namespace gcodim;

namespace {

ElementaryGrading grading(const FiniteGroup& g, std::vector<Elem> v) {
    return ElementaryGrading::analyze(g, std::move(v));
}

// |{g in H_g : counts(g h) = counts(h)}| for a count vector aligned with B
std::size_t count_stabilizer(const ElementaryGrading& gr, const std::vector<int>& c) {
    const auto& B = gr.B().members();
    std::size_t s = 0;
    for (Elem g : gr.H_g().members()) {
        bool fixed = true;
        for (std::size_t i = 0; i < B.size(); ++i)
            fixed = fixed && c[gr.block_of(gr.group().mul(g, B[i]))] == c[i];
        s += fixed;
    }
    return s;
}

BigInt catalan_recurrence(int n) {
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        c[k] = 0;
        for (int i = 0; i < k; ++i)
            c[k] += c[i] * c[k - 1 - i];
    }
    return c[n];
}

} // namespace

TEST_CASE("T operator matrices") {
    auto z2 = FiniteGroup::cyclic(2);
    auto gr = grading(z2, {0, 1});
    // 3-cycle with out = (in1, in2, in0)
    auto v = t_op_vector(gr, make_top_label(gr, {1, 2, 0}, {0, 1, 0}), 3);
    REQUIRE(v.size() == 2);
    // (0,1,0) -> (1,0,0) is label 2*8+4; its twin (1,0,1) -> (0,1,1) is 5*8+3
    CHECK(v.entries[0].first == 20);
    CHECK(v.entries[1].first == 43);
    CHECK(v.entries[0].second == 1);

    auto triv = grading(FiniteGroup::trivial(), {0, 0});
    auto id = t_op_vector(triv, make_top_label(triv, {0, 1}, {0, 0}), 2);
    CHECK(id.size() == 4);
    for (const auto& [l, c] : id.entries)
        CHECK(l / 4 == l % 4);

    auto z3 = FiniteGroup::cyclic(3);
    auto g3 = grading(z3, {0, 1});
    for (const auto& sigma : all_perms(3)) {
        std::vector<Elem> h{0, 1, 1};
        CHECK(t_op_vector(g3, make_top_label(g3, sigma, h), 3) == t_prime_vector(g3, sigma, h));
    }
    CHECK_THROWS_AS(t_prime_vector(g3, {0, 1}, {0, 2}), Error);
}

TEST_CASE("invariant space dimensions") {
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(invariant_dim_bruteforce(grading(z2, {0, 1}), 2) == 3);
    auto triv = grading(FiniteGroup::trivial(), {0, 0});
    CHECK(invariant_dim_bruteforce(triv, 2) == 2);
    for (int n = 0; n <= 5; ++n)
        CHECK(BigInt(static_cast<unsigned long>(invariant_dim_bruteforce(triv, n))) ==
              catalan_recurrence(n));
    auto z3 = FiniteGroup::cyclic(3);
    auto g = grading(z3, {0, 0, 1});
    for (int n = 1; n <= 4; ++n)
        CHECK(invariant_dim_bruteforce(g, n, InvariantFilter::n_cycles_only()) <=
              invariant_dim_bruteforce(g, n));
    OracleCaps tiny;
    tiny.max_n = 2;
    CHECK_THROWS_AS(invariant_dim_bruteforce(g, 3, InvariantFilter::all(), tiny), Error);
}

TEST_CASE("exact and modular elimination agree on invariant spans") {
    auto z2 = FiniteGroup::cyclic(2);
    auto g = grading(z2, {0, 0, 1});
    OracleCaps ex;
    ex.rank.mode = RankMode::Exact;
    for (int n = 1; n <= 3; ++n)
        CHECK(invariant_dim_bruteforce(g, n, InvariantFilter::all(), ex) ==
              invariant_dim_bruteforce(g, n));
}

TEST_CASE("folded multiplicity filter") {
    for (auto [name, vec] : std::vector<std::pair<const char*, std::vector<Elem>>>{
             {"C2", {0, 1}}, {"C4", {0, 1, 2, 3}}, {"C3", {0, 0, 1}}}) {
        auto gr = grading(FiniteGroup::builtin(name), vec);
        for (int n = 1; n <= 3; ++n) {
            std::vector<std::vector<int>> comps;
            std::function<void(int, std::vector<int>)> rec = [&](int left, std::vector<int> cur) {
                if (static_cast<int>(cur.size()) == gr.k() - 1) {
                    cur.push_back(left);
                    comps.push_back(cur);
                    return;
                }
                for (int a = 0; a <= left; ++a) {
                    auto nx = cur;
                    nx.push_back(a);
                    rec(left - a, nx);
                }
            };
            rec(n, {});
            for (const auto& c : comps) {
                const BigInt formula = per_multiplicity_dim(gr, c);
                CHECK(BigInt(static_cast<unsigned long>(invariant_dim_bruteforce(
                          gr, n, InvariantFilter::multiplicity(c)))) == formula);
                const BigInt stab = static_cast<unsigned long>(count_stabilizer(gr, c));
                CHECK(BigInt(static_cast<unsigned long>(invariant_dim_bruteforce(
                          gr, n, InvariantFilter::multiplicity(c, false)))) == formula / stab);
            }
        }
    }
}

TEST_CASE("graded monomials and codimensions") {
    auto triv = FiniteGroup::trivial();
    auto m2 = GSimpleStructure::from_elementary(grading(triv, {0, 0}));
    CHECK(graded_monomial_vector(m2, {0}, {0}).size() > 0);
    CHECK(codim_bruteforce(m2, 1) == 1);
    CHECK(codim_bruteforce(m2, 2) == 2);
    CHECK(codim_bruteforce(m2, 3) == 6);
    // c_n(M_2) = C_{n+1} - C(n,3) + 1 - 2^n
    CHECK(codim_bruteforce(m2, 4) == BigInt(42 - 4 + 1 - 16));
    CHECK(trace_space_dim(m2, 3) == 2);

    auto z4 = FiniteGroup::cyclic(4);
    auto g = GSimpleStructure::from_elementary(grading(z4, {0, 1}));
    // degrees 0, 1, 3 occur; 2 does not
    CHECK(graded_monomial_vector(g, {2}, {0}).empty());

    auto z2 = FiniteGroup::cyclic(2);
    auto fz2 = GSimpleStructure::from_fine(FineGrading(z2, whole_group(z2)));
    CHECK(codim_bruteforce(fz2, 2) == 4);
    CHECK(trace_space_dim(fz2, 3) == 4);

    auto v4 = FiniteGroup::builtin("C2xC2");
    auto tw = GSimpleStructure::from_fine(FineGrading(v4, whole_group(v4), sign_cocycle_c2xc2()));
    for (int n = 1; n <= 3; ++n)
        CHECK(trace_space_dim(tw, n) == codim_bruteforce(tw, n - 1));

    OracleCaps ex;
    ex.rank.mode = RankMode::Exact;
    CHECK(codim_bruteforce(m2, 3, ex) == 6);
}

TEST_CASE("S_n decomposition") {
    auto triv = grading(FiniteGroup::trivial(), {0, 0});
    auto dec = sn_module_decomposition(triv, 2);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].lambda == Partition({2}));
    CHECK(dec[0].multiplicity == 2);
    CHECK(dec[1].multiplicity == 0);

    auto z2 = grading(FiniteGroup::cyclic(2), {0, 1});
    for (int n = 1; n <= 4; ++n) {
        BigInt s = 0;
        for (const auto& c : sn_module_decomposition(z2, n)) {
            CHECK(c.multiplicity >= 0);
            s += c.multiplicity * sn_dim(c.lambda);
        }
        CHECK(s == BigInt(static_cast<unsigned long>(invariant_dim_bruteforce(z2, n))));
    }
}

TEST_CASE("complete and in-order vectors") {
    auto z3 = FiniteGroup::cyclic(3);
    auto gr = grading(z3, {2, 0, 0, 0, 1, 1, 1});
    CHECK_FALSE(is_in_order({2, 2, 1, 1, 2, 2, 0, 0, 0, 1, 0}, gr));
    CHECK(is_in_order({0, 1, 1, 1}, gr));
    CHECK_FALSE(is_complete({0, 1, 1, 1}, gr));
    CHECK(is_in_order({1, 2, 0, 0, 1}, gr));
    CHECK(is_complete({1, 2, 0, 0, 1}, gr));
    auto g2 = grading(z3, {0, 1});
    CHECK_THROWS_AS(is_in_order({0, 2}, g2), Error);
}

TEST_CASE("fine invariant counts") {
    CHECK(fine_invariant_dim_bruteforce(FiniteGroup::symmetric(3), 2) == 18);
    CHECK(fine_invariant_dim_bruteforce(FiniteGroup::quaternion8(), 3) == 128);
    auto c5 = FiniteGroup::cyclic(5);
    for (int n = 1; n <= 5; ++n)
        CHECK(fine_invariant_dim_bruteforce(c5, n) == ipow(5, n - 1));
}

TEST_CASE("parallel_for propagates exceptions") {
    std::atomic<int> hits{0};
    parallel_for(100, 4, [&](std::size_t) { ++hits; });
    CHECK(hits == 100);
    CHECK_THROWS_AS(parallel_for(10, 3,
                                 [](std::size_t i) {
                                     if (i == 7)
                                         throw Error(Errc::BadParameter, "boom");
                                 }),
                    Error);
}
