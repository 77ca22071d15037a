#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "lcp/closure.hpp"
#include "lcp/lattice.hpp"
#include "lcp/oracle.hpp"
#include "lcp/text.hpp"

using namespace lcp;
using fixtures::idx;
using fixtures::set_of;

namespace {

std::vector<int> image_of(const PosetPtr& p,
                          std::initializer_list<std::pair<const char*, const char*>> maps) {
    std::vector<int> image(p->size(), -1);
    for (const auto& [x, y] : maps) image[idx(p, x)] = idx(p, y);
    return image;
}

}  // namespace

TEST_CASE("validate accepts the identity and valid maps") {
    auto c = fixtures::chain3();
    auto id = ClosureRelation::validate(c, {0, 1, 2});
    CHECK(id == ClosureRelation::identity(c));
    CHECK(id.closed_set() == c->all());

    auto l = fixtures::lambda();
    auto h = ClosureRelation::validate(
        l, image_of(l, {{"x", "t"}, {"y", "y"}, {"t", "t"}}));
    CHECK(h.closed_set() == set_of(l, {"y", "t"}));
}

TEST_CASE("validate reports the first violated axiom with a witness") {
    auto c = fixtures::chain3();
    try {
        ClosureRelation::validate(c, image_of(c, {{"a", "b"}, {"b", "a"}, {"c", "c"}}));
        FAIL("expected NotExtensive");
    } catch (const NotExtensive& e) {
        CHECK(e.element == idx(c, "b"));
    }

    auto d = fixtures::diamond();
    // z -> a, rest identity: extensive, fails monotone on z <= b
    CHECK_THROWS_AS(ClosureRelation::validate(
                        d, image_of(d, {{"z", "a"}, {"a", "a"}, {"b", "b"}, {"w", "w"}})),
                    NotMonotone);

    // a -> b -> c on a 3-chain plus c -> c: idempotence fails at a.
    auto c3 = fixtures::chain3();
    CHECK_THROWS_AS(ClosureRelation::validate(
                        c3, image_of(c3, {{"a", "b"}, {"b", "c"}, {"c", "c"}})),
                    NotIdempotent);
}

TEST_CASE("from_closed_set") {
    auto d = fixtures::diamond();
    auto top = ClosureRelation::from_closed_set(d, set_of(d, {"w"}));
    for (int x = 0; x < d->size(); ++x) CHECK(top.apply(x) == idx(d, "w"));

    auto h = ClosureRelation::from_closed_set(d, set_of(d, {"w", "a", "z"}));
    CHECK(h.apply(idx(d, "z")) == idx(d, "z"));
    CHECK(h.apply(idx(d, "a")) == idx(d, "a"));
    CHECK(h.apply(idx(d, "b")) == idx(d, "w"));
    CHECK(h.apply(idx(d, "w")) == idx(d, "w"));

    auto c = fixtures::chain3();
    CHECK(ClosureRelation::from_closed_set(c, c->all()) == ClosureRelation::identity(c));

    CHECK_THROWS_AS(ClosureRelation::from_closed_set(d, set_of(d, {"w", "a", "b"})),
                    NotMlbClosed);
}

TEST_CASE("closed_set round trips with from_closed_set") {
    for (const auto& p : fixtures::all()) {
        auto fam = enumerate_closed_interval(p);
        for (Mask a : fam.sets) {
            auto h = ClosureRelation::from_closed_set(p, a);
            CHECK(h.closed_set() == a);
            CHECK(ClosureRelation::from_closed_set(p, h.closed_set()) == h);
            CHECK((mlb_closure(*p, 0) & ~h.closed_set()) == 0);  // contains M̄
        }
    }
}

TEST_CASE("leq_closure agrees with refinement and closed-set inclusion") {
    auto d = fixtures::diamond();
    auto id = ClosureRelation::identity(d);
    auto top = ClosureRelation::from_closed_set(d, set_of(d, {"w"}));
    CHECK(leq_closure(id, top));
    CHECK_FALSE(leq_closure(top, id));

    auto nodes = oracle::enumerate_closures_naive(d);
    REQUIRE(nodes.size() == 7);
    for (const auto& h : nodes) {
        CHECK(leq_closure(id, h));
        for (const auto& k : nodes) {
            bool pointwise = leq_closure(h, k);
            CHECK(pointwise == refines(to_partition(h), to_partition(k)));
            CHECK(pointwise == ((k.closed_set() & ~h.closed_set()) == 0));
        }
    }

    auto c = fixtures::chain3();
    CHECK_THROWS_AS(leq_closure(id, ClosureRelation::identity(c)), PosetMismatch);
}

TEST_CASE("join examples") {
    auto d = fixtures::diamond();
    auto id = ClosureRelation::identity(d);
    auto ha = ClosureRelation::from_closed_set(d, set_of(d, {"w", "a", "z"}));
    auto hb = ClosureRelation::from_closed_set(d, set_of(d, {"w", "b", "z"}));
    CHECK(join(ha, id) == ha);
    CHECK(join(ha, ha) == ha);
    auto j = join(ha, hb);
    CHECK(j.closed_set() == set_of(d, {"w", "z"}));
    CHECK(join_via_partitions(ha, hb) == j);
}

TEST_CASE("join algorithms agree on all pairs of closures") {
    auto posets = fixtures::all();
    for (std::uint64_t seed = 0; seed < 25; ++seed)
        posets.push_back(oracle::random_poset(
            {.size = 2 + static_cast<int>(seed % 5), .edge_probability = 0.4, .seed = seed + 3}));
    for (const auto& p : posets) {
        auto l = LcLattice::build(p);
        for (int i = 0; i < l.node_count(); ++i)
            for (int j = 0; j < l.node_count(); ++j)
                CHECK(join(l.node(i), l.node(j)) == join_via_partitions(l.node(i), l.node(j)));
    }
}

TEST_CASE("meet examples") {
    auto d = fixtures::diamond();
    auto ha = ClosureRelation::from_closed_set(d, set_of(d, {"w", "a"}));
    auto hb = ClosureRelation::from_closed_set(d, set_of(d, {"w", "b"}));
    CHECK(meet(ha, ha) == ha);
    CHECK(meet(ha, hb) == ClosureRelation::identity(d));

    auto top = ClosureRelation::from_closed_set(d, set_of(d, {"w"}));
    auto l = LcLattice::build(d);
    for (int i = 0; i < l.node_count(); ++i) CHECK(meet(l.node(i), top) == l.node(i));
}

TEST_CASE("meet is the brute-force greatest lower bound") {
    for (const auto& p : fixtures::all()) {
        if (p->size() > 5) continue;
        auto all = oracle::enumerate_closures_naive(p);
        for (const auto& h : all)
            for (const auto& k : all) {
                auto m = meet(h, k);
                CHECK(leq_closure(m, h));
                CHECK(leq_closure(m, k));
                for (const auto& j : all)
                    if (leq_closure(j, h) && leq_closure(j, k)) CHECK(leq_closure(j, m));
            }
    }
}

TEST_CASE("lattice axioms hold exhaustively on fixtures") {
    for (const auto& p : fixtures::all()) {
        auto l = LcLattice::build(p);
        std::vector<ClosureRelation> nodes;
        for (int i = 0; i < l.node_count(); ++i) nodes.push_back(l.node(i));
        for (const auto& h : nodes)
            for (const auto& k : nodes) {
                CHECK(join(h, k) == join(k, h));
                CHECK(meet(h, k) == meet(k, h));
                CHECK(join(h, meet(h, k)) == h);  // absorption
                CHECK(meet(h, join(h, k)) == h);
                for (const auto& g : nodes) {
                    CHECK(join(join(h, k), g) == join(h, join(k, g)));
                    CHECK(meet(meet(h, k), g) == meet(h, meet(k, g)));
                }
            }
    }
}

TEST_CASE("n-ary join and meet fold") {
    auto d = fixtures::diamond();
    auto l = LcLattice::build(d);
    std::vector<ClosureRelation> nodes;
    for (int i = 0; i < l.node_count(); ++i) nodes.push_back(l.node(i));
    CHECK(join_all(nodes).closed_set() == set_of(d, {"w"}));
    CHECK(meet_all(nodes) == ClosureRelation::identity(d));
}

TEST_CASE("to_partition") {
    auto c = fixtures::chain3();
    auto id_part = to_partition(ClosureRelation::identity(c));
    CHECK(id_part.blocks.size() == 3);

    auto d = fixtures::diamond();
    auto top_part = to_partition(ClosureRelation::from_closed_set(d, set_of(d, {"w"})));
    REQUIRE(top_part.blocks.size() == 1);
    CHECK(top_part.blocks[0].size() == 4);
    CHECK(top_part.leaders[0] == idx(d, "w"));

    auto h = ClosureRelation::from_closed_set(d, set_of(d, {"w", "a", "z"}));
    auto part = to_partition(h);
    REQUIRE(part.blocks.size() == 3);  // {z}, {a}, {b, w}
    CHECK(part.leaders == std::vector<int>{idx(d, "z"), idx(d, "a"), idx(d, "w")});
    CHECK(part.blocks[2] == std::vector<int>{idx(d, "b"), idx(d, "w")});

    // block count equals the closed-set size everywhere
    for (const auto& p : fixtures::all()) {
        auto l = LcLattice::build(p);
        for (int i = 0; i < l.node_count(); ++i)
            CHECK(static_cast<int>(to_partition(l.node(i)).blocks.size()) ==
                  popcount(l.closed_set(i)));
    }
}

TEST_CASE("closure text form parses both syntaxes") {
    auto d = fixtures::diamond();
    std::istringstream arrows("z -> z\na -> a\nb -> w\nw -> w\n");
    auto h = parse_closure(arrows, d);
    CHECK(h.closed_set() == set_of(d, {"w", "a", "z"}));

    std::istringstream closed("closed: {z, a, w}\n");
    CHECK(parse_closure(closed, d) == h);

    std::istringstream bad("closed: {w, a, b}\n");
    CHECK_THROWS_AS(parse_closure(bad, d), NotMlbClosed);
}
