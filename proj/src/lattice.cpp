#include "lcp/lattice.hpp"

#include <algorithm>
#include <map>

namespace lcp {

LcLattice LcLattice::build(PosetPtr p, int size_cap) {
    LcLattice l;
    l.poset_ = p;
    MlbClosedFamily fam = enumerate_closed_interval(p, size_cap);
    l.closed_ = fam.sets;  // already (size desc, mask): identity first, M̄ last
    for (Mask a : l.closed_) l.nodes_.push_back(ClosureRelation::from_closed_set(p, a));

    const int n = l.node_count();
    for (int i = 0; i < n; ++i) l.rank_.push_back(p->size() - popcount(l.closed_[i]));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (l.covers(i, j)) l.hasse_.emplace_back(i, j);

    // μ(0̂, ·) by direct recursion; node order is a linear extension of
    // the lattice order, so predecessors are already known.
    l.mobius_.assign(n, 0);
    l.mobius_[0] = 1;
    for (int r = 1; r < n; ++r) {
        long long sum = 0;
        for (int q = 0; q < r; ++q)
            if (l.leq(q, r)) sum += l.mobius_[q];
        l.mobius_[r] = -sum;
    }
    return l;
}

std::optional<int> LcLattice::node_of(Mask closed) const {
    auto it = std::find(closed_.begin(), closed_.end(), closed);
    if (it == closed_.end()) return std::nullopt;
    return static_cast<int>(it - closed_.begin());
}

bool LcLattice::covers(int i, int j) const {
    if (i == j || !leq(i, j)) return false;
    for (int k = 0; k < node_count(); ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) return false;
    return true;
}

std::vector<int> LcLattice::upper_covers(int i) const {
    std::vector<int> out;
    for (const auto& [lo, hi] : hasse_)
        if (lo == i) out.push_back(hi);
    return out;
}

int LcLattice::join(int i, int j) const {
    auto k = node_of(closed_[i] & closed_[j]);
    if (!k) throw InvariantViolation("intersection of closed sets is not in the family");
    return *k;
}

int LcLattice::meet(int i, int j) const {
    auto k = node_of(mlb_closure(*poset_, closed_[i] | closed_[j]));
    if (!k) throw InvariantViolation("mlb-closure of a union of closed sets is not in the family");
    return *k;
}

std::vector<int> LcLattice::atoms() const {
    std::vector<int> out;
    for (int i = 0; i < node_count(); ++i)
        if (rank_[i] == 1) out.push_back(i);
    return out;
}

Polynomial LcLattice::characteristic_polynomial() const {
    Polynomial chi;
    int top_rank = rank_[top()];
    for (int q = 0; q < node_count(); ++q)
        chi = chi + Polynomial::monomial(mobius_[q], top_rank - rank_[q]);
    return chi;
}

Polynomial closed_form_char_poly(const Poset& p) {
    int s = popcount(p.covered_by_unique());
    int m = popcount(mlb_closure(p, 0));
    int k = p.size() - m - s;
    if (k < 0)
        throw InvariantViolation("negative exponent in closed form: |P|=" +
                                 std::to_string(p.size()) + ", m=" + std::to_string(m) +
                                 ", s=" + std::to_string(s));
    return shifted_power(s, k);
}

CheckResult check_join_distributive(const LcLattice& l) {
    for (int q = 0; q < l.node_count(); ++q) {
        std::vector<int> ups = l.upper_covers(q);
        const int k = static_cast<int>(ups.size());
        // Joins of all subsets of the covers, indexed by subset mask.
        std::vector<int> node_of_sub(std::size_t{1} << k);
        for (Mask sub = 0; sub < (Mask{1} << k); ++sub) {
            Mask closed = l.closed_set(q);
            for (int b = 0; b < k; ++b)
                if (has(sub, b)) closed &= l.closed_set(ups[b]);
            auto node = l.node_of(closed);
            if (!node)
                return {false, "join of covers of node " +
                                   l.poset()->set_to_string(l.closed_set(q)) + " left the lattice"};
            node_of_sub[sub] = *node;
        }
        std::string at = "interval above " + l.poset()->set_to_string(l.closed_set(q));
        // Distinct joins, and order isomorphic to subset inclusion.
        for (Mask s1 = 0; s1 < (Mask{1} << k); ++s1)
            for (Mask s2 = 0; s2 < (Mask{1} << k); ++s2) {
                bool sub_incl = (s1 & ~s2) == 0;
                if (l.leq(node_of_sub[s1], node_of_sub[s2]) != sub_incl)
                    return {false, at + " is not Boolean: order mismatch"};
            }
        // The 2^k joins must exhaust the interval [q, join of covers].
        int full = node_of_sub.back();
        int count = 0;
        for (int r = 0; r < l.node_count(); ++r)
            if (l.leq(q, r) && l.leq(r, full)) ++count;
        if (count != (1 << k))
            return {false, at + " has " + std::to_string(count) + " elements, expected 2^" +
                               std::to_string(k)};
    }
    return {};
}

CheckResult check_semimodular(const LcLattice& l) {
    for (int q = 0; q < l.node_count(); ++q)
        for (int r = q + 1; r < l.node_count(); ++r) {
            int m = l.meet(q, r);
            if (!l.covers(m, q) || !l.covers(m, r)) continue;
            int j = l.join(q, r);
            if (!l.covers(q, j) || !l.covers(r, j))
                return {false, "nodes " + l.poset()->set_to_string(l.closed_set(q)) + ", " +
                                   l.poset()->set_to_string(l.closed_set(r)) +
                                   " cover their meet but are not covered by their join"};
        }
    return {};
}

bool is_modular_bruteforce(const LcLattice& l, int node) {
    for (int k = 0; k < l.node_count(); ++k)
        for (int k2 = 0; k2 < l.node_count(); ++k2) {
            if (k == k2 || !l.leq(k, k2)) continue;
            if (l.join(node, k) == l.join(node, k2) && l.meet(node, k) == l.meet(node, k2))
                return false;
        }
    return true;
}

bool has_cover_property(const ClosureRelation& h) {
    const Poset& p = *h.poset();
    if (!p.greatest()) throw NoGreatestElement();
    for (const auto& [x, y] : p.covers())
        if (h.apply(x) != x && h.apply(y) != h.apply(x)) return false;
    return true;
}

std::vector<ClosureRelation> m_chain(const PosetPtr& p) {
    // Closed sets M̄ ∪ {p_1..p_i} for a linear extension: prefixes are
    // order ideals, so each is mlb-closed. With a greatest element this
    // is exactly the {1̂, p_1, ..., p_i} chain; without one it is that
    // chain of LC(P+1̂) restricted to the interval isomorphic to LC(P).
    Mask base = mlb_closure(*p, 0);
    std::vector<int> ext = p->linear_extension();
    std::vector<Mask> sets;
    Mask cur = base;
    sets.push_back(cur);
    for (int x : ext)
        if (!has(cur, x)) {
            cur |= bit(x);
            sets.push_back(cur);
        }
    // Bottom (identity, closed set P) first.
    std::vector<ClosureRelation> chain;
    for (auto it = sets.rbegin(); it != sets.rend(); ++it)
        chain.push_back(ClosureRelation::from_closed_set(p, *it));
    return chain;
}

namespace {

// Common refinement of two block partitions, canonical form.
std::vector<std::vector<int>> refine_blocks(const ClosurePartition& a, const ClosurePartition& b) {
    std::map<std::pair<int, int>, std::vector<int>> cells;
    auto block_of = [](const ClosurePartition& part, int x) {
        for (int i = 0; i < static_cast<int>(part.blocks.size()); ++i)
            for (int m : part.blocks[i])
                if (m == x) return i;
        return -1;
    };
    int n = 0;
    for (const auto& blk : a.blocks) n += static_cast<int>(blk.size());
    for (int x = 0; x < n; ++x) cells[{block_of(a, x), block_of(b, x)}].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [key, cell] : cells) out.push_back(std::move(cell));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SublatticeResult check_sublattice_of_partitions(const PosetPtr& p, int size_cap) {
    if (!p->greatest()) throw NoGreatestElement();
    SublatticeResult r{true, true, ""};

    // Route (a): 0̂ + P is a lattice.
    PosetPtr bottomed = adjoin_bottom(p);
    if (auto w = bottomed->lattice_witness()) {
        r.via_lattice_test = false;
        r.witness = bottomed->label(w->x) + "," + bottomed->label(w->y) + " have " +
                    (w->join_side ? "minimal upper bounds " : "maximal lower bounds ") +
                    bottomed->set_to_string(w->candidates);
    }

    // Route (b): blockwise intersection in Π(P) matches the LC(P) meet.
    LcLattice l = LcLattice::build(p, size_cap);
    for (int i = 0; i < l.node_count() && r.via_partition_meet; ++i)
        for (int j = i; j < l.node_count(); ++j) {
            auto refined = refine_blocks(to_partition(l.node(i)), to_partition(l.node(j)));
            auto lc_meet = to_partition(l.node(l.meet(i, j))).blocks;
            std::sort(lc_meet.begin(), lc_meet.end());
            if (refined != lc_meet) {
                r.via_partition_meet = false;
                if (r.witness.empty())
                    r.witness = "Π(P)-meet of closures with closed sets " +
                                p->set_to_string(l.closed_set(i)) + ", " +
                                p->set_to_string(l.closed_set(j)) + " is not a closure partition";
                break;
            }
        }
    return r;
}

}  // namespace lcp
