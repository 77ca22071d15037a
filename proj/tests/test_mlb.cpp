#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lcp/mlb.hpp"
#include "lcp/oracle.hpp"

using namespace lcp;
using fixtures::set_of;

TEST_CASE("is_mlb_closed") {
    auto d = fixtures::diamond();
    CHECK_FALSE(is_mlb_closed(*d, set_of(d, {"w", "a", "b"})));  // mlb{a,b} = z
    auto v = mlb_violation(*d, set_of(d, {"w", "a", "b"}));
    REQUIRE(v.has_value());
    CHECK(v->escaped == set_of(d, {"z"}));
    CHECK(is_mlb_closed(*d, set_of(d, {"w", "a", "b", "z"})));

    auto c = fixtures::chain3();
    CHECK(is_mlb_closed(*c, set_of(c, {"c", "a"})));
    // brute force: every subset of a chain containing the top is closed
    for (Mask a = 0; a <= c->all(); ++a) {
        bool expect = has(a, 2);  // contains c
        CHECK(is_mlb_closed(*c, a) == expect);
        if (a == c->all()) break;
    }
}

TEST_CASE("mlb_closure on fixtures") {
    auto v = fixtures::vee();
    CHECK(mlb_closure(*v, set_of(v, {"a", "b"})) == set_of(v, {"a", "b", "c"}));
    auto d = fixtures::diamond();
    CHECK(mlb_closure(*d, set_of(d, {"a", "b"})) == d->all());
    for (const auto& p : fixtures::all()) {
        Mask mbar = mlb_closure(*p, 0);
        CHECK((p->maximal_elements() & ~mbar) == 0);
        CHECK(mbar == oracle::mlb_closure_by_intersection(*p, 0));
    }
}

TEST_CASE("mlb_closure is a closure operator and matches the intersection oracle") {
    auto posets = fixtures::all();
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        posets.push_back(oracle::random_poset(
            {.size = 1 + static_cast<int>(seed % 6), .edge_probability = 0.4, .seed = seed + 7}));
    for (const auto& p : posets) {
        if (p->size() > 6) continue;
        std::vector<Mask> cl(p->all() + 1u);
        for (Mask a = 0;; ++a) {
            cl[a] = mlb_closure(*p, a);
            CHECK((a & ~cl[a]) == 0);               // extensive
            CHECK(mlb_closure(*p, cl[a]) == cl[a]); // idempotent
            CHECK(is_mlb_closed(*p, cl[a]));
            CHECK(cl[a] == oracle::mlb_closure_by_intersection(*p, a));
            if (a == p->all()) break;
        }
        bool monotone = true;
        for (Mask a = 0;; ++a) {
            for (Mask b = a;; ++b) {
                if ((a & ~b) == 0 && (cl[a] & ~cl[b]) != 0) monotone = false;
                if (b == p->all()) break;
            }
            if (a == p->all()) break;
        }
        CHECK(monotone);
    }
}

TEST_CASE("intersection of mlb-closed sets is mlb-closed") {
    for (const auto& p : fixtures::all()) {
        auto closed = all_mlb_closed_sets(*p);
        for (Mask x : closed)
            for (Mask y : closed) CHECK(is_mlb_closed(*p, x & y));
    }
}

TEST_CASE("enumerate_closed_interval") {
    auto c = fixtures::chain3();
    auto fam = enumerate_closed_interval(c);
    REQUIRE(fam.sets.size() == 4);
    CHECK(fam.base == set_of(c, {"c"}));
    CHECK(fam.sets.front() == c->all());
    CHECK(fam.sets.back() == fam.base);

    CHECK(enumerate_closed_interval(fixtures::diamond()).sets.size() == 7);

    auto a2 = fixtures::antichain2();
    auto fam2 = enumerate_closed_interval(a2);
    REQUIRE(fam2.sets.size() == 1);
    CHECK(fam2.sets[0] == a2->all());

    for (const auto& p : fixtures::all()) {
        auto f = enumerate_closed_interval(p);
        for (Mask s : f.sets) {
            CHECK((f.base & ~s) == 0);
            CHECK((p->maximal_elements() & ~s) == 0);
            CHECK(is_mlb_closed(*p, s));
        }
        // hasse pairs are inclusion covers
        for (const auto& [i, j] : f.hasse) {
            CHECK((f.sets[i] & ~f.sets[j]) == 0);
            CHECK(f.sets[i] != f.sets[j]);
        }
    }
}

TEST_CASE("enumerate_closed_interval enforces the size cap") {
    auto p = oracle::random_poset({.size = 7, .edge_probability = 0.0, .seed = 1, .require_top = true});
    CHECK_THROWS_AS(enumerate_closed_interval(p, 3), SizeLimit);
}

TEST_CASE("anti-exchange holds on fixtures and random posets") {
    CHECK(check_anti_exchange(*fixtures::diamond()).ok);
    CHECK(check_anti_exchange(*fixtures::lambda()).ok);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto p = oracle::random_poset(
            {.size = 2 + static_cast<int>(seed % 5), .edge_probability = 0.4, .seed = seed});
        CHECK(check_anti_exchange(*p).ok);
    }
}

TEST_CASE("new closure members are below the adjoined element") {
    // x in cl(A ∪ {y}) with x not in cl(A) = A forces x <= y
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto p = oracle::random_poset(
            {.size = 2 + static_cast<int>(seed % 5), .edge_probability = 0.4, .seed = seed + 99});
        for (Mask a : all_mlb_closed_sets(*p))
            for (int y = 0; y < p->size(); ++y) {
                if (has(a, y)) continue;
                Mask cl = mlb_closure(*p, a | bit(y));
                for (int x = 0; x < p->size(); ++x)
                    if (has(cl, x) && !has(a, x)) CHECK(p->leq(x, y));
            }
    }
}
