#include "lcp/closure.hpp"

#include <algorithm>
#include <numeric>

namespace lcp {

ClosureRelation::ClosureRelation(PosetPtr p, std::vector<int> image)
    : poset_(std::move(p)), image_(std::move(image)) {
    for (int x = 0; x < poset_->size(); ++x)
        if (image_[x] == x) closed_ |= bit(x);
}

ClosureRelation ClosureRelation::validate(PosetPtr p, std::vector<int> image) {
    const Poset& ps = *p;
    const int n = ps.size();
    for (int x = 0; x < n; ++x)
        if (!ps.leq(x, image[x])) throw NotExtensive(x, ps.label(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (ps.leq(x, y) && !ps.leq(image[x], image[y]))
                throw NotMonotone(x, y, ps.label(x), ps.label(y));
    for (int x = 0; x < n; ++x)
        if (image[image[x]] != image[x]) throw NotIdempotent(x, ps.label(x));
    return ClosureRelation(std::move(p), std::move(image));
}

ClosureRelation ClosureRelation::from_closed_set(PosetPtr p, Mask a) {
    if (auto v = mlb_violation(*p, a))
        throw NotMlbClosed(v->subset, v->escaped,
                           "set " + p->set_to_string(a) + " is not mlb-closed: mlb of " +
                               p->set_to_string(v->subset) + " contains " +
                               p->set_to_string(v->escaped));
    std::vector<int> image(p->size());
    for (int x = 0; x < p->size(); ++x) {
        MinAbove m = p->min_above(a, x);
        if (!m.found())
            throw InvariantViolation("A_{>=" + p->label(x) + "} has no minimum in mlb-closed " +
                                     p->set_to_string(a));
        image[x] = m.element;
    }
    return ClosureRelation(std::move(p), std::move(image));
}

ClosureRelation ClosureRelation::identity(PosetPtr p) {
    std::vector<int> image(p->size());
    std::iota(image.begin(), image.end(), 0);
    return ClosureRelation(std::move(p), std::move(image));
}

ClosurePartition to_partition(const ClosureRelation& h) {
    const Poset& p = *h.poset();
    ClosurePartition part;
    for (int leader = 0; leader < p.size(); ++leader) {
        if (!has(h.closed_set(), leader)) continue;
        std::vector<int> block;
        for (int x = 0; x < p.size(); ++x)
            if (h.apply(x) == leader) block.push_back(x);
        part.blocks.push_back(std::move(block));
        part.leaders.push_back(leader);
    }
    return part;
}

bool refines(const ClosurePartition& fine, const ClosurePartition& coarse) {
    for (const auto& fb : fine.blocks) {
        bool inside = false;
        for (const auto& cb : coarse.blocks) {
            if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

namespace {

void require_same_poset(const ClosureRelation& h, const ClosureRelation& k) {
    if (h.poset() != k.poset()) throw PosetMismatch();
}

}  // namespace

bool leq_closure(const ClosureRelation& h, const ClosureRelation& k) {
    require_same_poset(h, k);
    for (int x = 0; x < h.poset()->size(); ++x)
        if (!h.poset()->leq(h.apply(x), k.apply(x))) return false;
    return true;
}

ClosureRelation join(const ClosureRelation& h, const ClosureRelation& k) {
    require_same_poset(h, k);
    return ClosureRelation::from_closed_set(h.poset(), h.closed_set() & k.closed_set());
}

ClosureRelation join_via_partitions(const ClosureRelation& h, const ClosureRelation& k) {
    require_same_poset(h, k);
    const Poset& p = *h.poset();
    const int n = p.size();

    // Partition join in Π(P): components generated by x ~ H(x), x ~ K(x).
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    auto unite = [&](int a, int b) { root[find(a)] = find(b); };
    for (int x = 0; x < n; ++x) {
        unite(x, h.apply(x));
        unite(x, k.apply(x));
    }

    // Round-robin fixpoint of the two maps lands on the join's value.
    std::vector<int> image(n);
    for (int x = 0; x < n; ++x) {
        int y = x;
        while (true) {
            int z = k.apply(h.apply(y));
            if (z == y) break;
            y = z;
        }
        image[x] = y;
    }

    // Each join block must have a unique greatest element, and the
    // fixpoint must land on it.
    for (int x = 0; x < n; ++x) {
        Mask block = 0;
        for (int z = 0; z < n; ++z)
            if (find(z) == find(x)) block |= bit(z);
        Mask maxes = p.maximal_in(block);
        if (popcount(maxes) != 1 || maxes != bit(image[x]))
            throw InvariantViolation("partition-join block " + p.set_to_string(block) +
                                     " has no unique greatest element");
    }
    return ClosureRelation::validate(h.poset(), std::move(image));
}

ClosureRelation join_all(std::span<const ClosureRelation> hs) {
    if (hs.empty()) throw Error("join_all of an empty family");
    ClosureRelation acc = hs[0];
    for (std::size_t i = 1; i < hs.size(); ++i) acc = join(acc, hs[i]);
    return acc;
}

ClosureRelation meet(const ClosureRelation& h, const ClosureRelation& k) {
    require_same_poset(h, k);
    return ClosureRelation::from_closed_set(
        h.poset(), mlb_closure(*h.poset(), h.closed_set() | k.closed_set()));
}

ClosureRelation meet_all(std::span<const ClosureRelation> hs) {
    if (hs.empty()) throw Error("meet_all of an empty family");
    ClosureRelation acc = hs[0];
    for (std::size_t i = 1; i < hs.size(); ++i) acc = meet(acc, hs[i]);
    return acc;
}

}  // namespace lcp
