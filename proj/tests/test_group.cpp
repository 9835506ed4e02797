#include <doctest.h>

#include "gcodim/error.hpp"
#include "gcodim/group.hpp"

#include <algorithm>
#include <set>

using namespace gcodim;

namespace {

// Closure of all commutators under multiplication, computed without the library routine.
std::set<Elem> commutator_closure(const FiniteGroup& g) {
    std::set<Elem> s{0};
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            s.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> cur(s.begin(), s.end());
        for (Elem x : cur)
            for (Elem y : cur)
                grew |= s.insert(g.mul(x, y)).second;
    }
    return s;
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return t;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::ParseError;
}

} // namespace

TEST_CASE("cayley table validation") {
    CHECK(FiniteGroup::from_cayley_table({{0}}).order() == 1);
    auto z3 = FiniteGroup::from_cayley_table(cyclic_table(3));
    CHECK(z3.order() == 3);
    CHECK(z3.is_abelian());

    auto bad = cyclic_table(3);
    bad[1] = {1, 1, 2};
    CHECK(code_of([&] { FiniteGroup::from_cayley_table(bad); }) == Errc::NoInverse);
    CHECK(code_of([&] { FiniteGroup::from_cayley_table({{0, 1}, {1, 0}, {0, 1}}); }) ==
          Errc::BadParameter);
    CHECK(code_of([&] { FiniteGroup::from_cayley_table({{0, 5}, {1, 0}}); }) == Errc::BadParameter);

    // x*y = -x-y mod 3 is a Latin square with no identity element
    CHECK(code_of([&] { FiniteGroup::from_cayley_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }) ==
          Errc::NoIdentity);

    // A quasigroup with identity 0 that is not associative (order-5 loop)
    std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 4, 0, 1, 3},
                                          {3, 2, 4, 0, 1},
                                          {4, 3, 1, 2, 0}};
    CHECK(code_of([&] { FiniteGroup::from_cayley_table(loop); }) == Errc::NotAssociative);
}

TEST_CASE("identity is moved to index 0") {
    // Z2 with the identity stored at index 1
    auto g = FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}, {"a", "e"});
    CHECK(g.label(0) == "e");
    CHECK(g.relabeling()[1] == 0);
    CHECK(*g.find("1") == 0);
}

TEST_CASE("builtin groups") {
    CHECK(FiniteGroup::cyclic(2).order() == 2);
    auto d3 = FiniteGroup::dihedral(3);
    CHECK(d3.order() == 6);
    CHECK_FALSE(d3.is_abelian());
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(v4.order() == 4);
    CHECK(v4.is_abelian());
    CHECK(FiniteGroup::symmetric(5).order() == 120);
    CHECK(FiniteGroup::builtin("C2xC2").order() == 4);
    CHECK(FiniteGroup::builtin("Q8").order() == 8);
    CHECK(code_of([] { FiniteGroup::builtin("X7"); }) == Errc::UnknownName);

    // dihedral relation s r s = r^-1
    Elem r = *d3.find("r"), s = *d3.find("s");
    CHECK(d3.mul(d3.mul(s, r), s) == d3.inv(r));
}

TEST_CASE("commutator subgroup agrees with closure oracle") {
    for (const auto& name : {"C4", "C2xC2", "S3", "D4", "Q8", "S4", "D5", "C2xS3"}) {
        auto g = FiniteGroup::builtin(name);
        auto got = commutator_subgroup(g).members();
        auto want = commutator_closure(g);
        CHECK_MESSAGE(std::vector<Elem>(want.begin(), want.end()) == got, name);
    }
    CHECK(commutator_subgroup(FiniteGroup::symmetric(3)).size() == 3);
    CHECK(commutator_subgroup(FiniteGroup::quaternion8()).size() == 2);
    CHECK(commutator_subgroup(FiniteGroup::cyclic(6)).size() == 1);
}

TEST_CASE("sigma sets") {
    auto s3 = FiniteGroup::symmetric(3);
    Elem t = *s3.find("(1 2)"), r = *s3.find("(1 2 3)");
    auto sig = sigma_set(s3, {t, r});
    CHECK(sig.size() == 2);
    CHECK(sig.contains(s3.mul(t, r)));
    CHECK(sig.contains(s3.mul(r, t)));

    auto z5 = FiniteGroup::cyclic(5);
    CHECK(sigma_set(z5, {1, 2, 4}).members() == std::vector<Elem>{2});
    CHECK(sigma_set(z5, {}).members() == std::vector<Elem>{0});

    // every sigma set lies in one coset of H'
    for (const auto& name : {"S3", "Q8", "D4"}) {
        auto g = FiniteGroup::builtin(name);
        auto hp = commutator_subgroup(g);
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                for (int c = 0; c < g.order(); ++c) {
                    auto sg = sigma_set(g, {a, b, c});
                    CHECK(sg.size() <= hp.size());
                    Elem x0 = sg.members()[0];
                    for (Elem x : sg.members())
                        CHECK(hp.contains(g.mul(g.inv(x0), x)));
                }
    }
}

TEST_CASE("commutator tuples") {
    auto ab = find_commutator_tuple(FiniteGroup::cyclic(4), 6);
    CHECK(ab.n0 == 0);
    CHECK(ab.h0.empty());
    CHECK(find_commutator_tuple(FiniteGroup::trivial(), 3).n0 == 0);
    auto s3 = FiniteGroup::symmetric(3);
    auto ct = find_commutator_tuple(s3, 6);
    CHECK(sigma_set(s3, ct.h0) == commutator_subgroup(s3));
    CHECK(code_of([&] { find_commutator_tuple(s3, 1); }) == Errc::NotFoundWithinBound);
}

TEST_CASE("cosets and subgroups") {
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(left_coset_reps(s3, whole_group(s3)) == std::vector<Elem>{0});
    CHECK(left_coset_reps(s3, trivial_subgroup(s3)).size() == 6);
    CHECK(left_coset_reps(s3, commutator_subgroup(s3)).size() == 2);
    CHECK(code_of([&] { make_subgroup(s3, {0, 1, 2}); }) == Errc::NotASubgroup);
    auto h = generated_subgroup(s3, {*s3.find("(1 2 3)")});
    CHECK(h.size() == 3);
    CHECK(h.as_group().is_abelian());
}

TEST_CASE("automorphism counts") {
    CHECK(automorphisms(FiniteGroup::cyclic(5)).size() == 4);
    CHECK(automorphisms(FiniteGroup::builtin("C2xC2")).size() == 6);
    CHECK(automorphisms(FiniteGroup::symmetric(3)).size() == 6);
    CHECK(automorphisms(FiniteGroup::quaternion8()).size() == 24);
    auto aut = automorphisms(FiniteGroup::dihedral(4));
    CHECK(aut.size() == 8);
    std::vector<Elem> id(8);
    for (int i = 0; i < 8; ++i)
        id[i] = i;
    CHECK(aut.front() == id);
}
