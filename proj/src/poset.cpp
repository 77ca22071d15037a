#include "lcp/poset.hpp"

#include <algorithm>
#include <map>

namespace lcp {

PosetPtr Poset::from_covers(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto p = std::shared_ptr<Poset>(new Poset());
    const int n = static_cast<int>(labels.size());
    if (n > kMaxElements) throw SizeLimit("poset exceeds " + std::to_string(kMaxElements) + " elements");

    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(labels[i], i).second)
            throw LabelCollision(labels[i]);
    }

    std::vector<Mask> adj(n, 0);
    for (const auto& [a, b] : pairs) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw UnknownLabel(a);
        if (ib == index.end()) throw UnknownLabel(b);
        if (ia->second == ib->second)
            throw CycleError("reflexive pair " + a + " < " + b);
        adj[ia->second] |= bit(ib->second);
    }

    // Strict reachability by iterating adjacency to a fixpoint.
    std::vector<Mask> reach = adj;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            Mask next = reach[i];
            for (int j = 0; j < n; ++j)
                if (has(reach[i], j)) next |= reach[j];
            if (next != reach[i]) { reach[i] = next; changed = true; }
        }
    }
    for (int i = 0; i < n; ++i)
        if (has(reach[i], i))
            throw CycleError("cycle through " + labels[i]);

    p->n_ = n;
    p->labels_ = std::move(labels);
    p->up_.assign(n, 0);
    p->down_.assign(n, 0);
    p->cover_up_.assign(n, 0);
    for (int i = 0; i < n; ++i) p->up_[i] = reach[i] | bit(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (has(p->up_[i], j)) p->down_[j] |= bit(i);

    // Transitive reduction: y covers x iff x < y with nothing in between.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !p->leq(x, y)) continue;
            Mask between = p->up_[x] & p->down_[y] & ~bit(x) & ~bit(y);
            if (between == 0) {
                p->covers_.emplace_back(x, y);
                p->cover_up_[x] |= bit(y);
            }
        }
    return p;
}

std::optional<int> Poset::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

Mask Poset::maximal_in(Mask s) const {
    Mask out = 0;
    for (int i = 0; i < n_; ++i)
        if (has(s, i) && (up_[i] & s & ~bit(i)) == 0) out |= bit(i);
    return out;
}

Mask Poset::minimal_in(Mask s) const {
    Mask out = 0;
    for (int i = 0; i < n_; ++i)
        if (has(s, i) && (down_[i] & s & ~bit(i)) == 0) out |= bit(i);
    return out;
}

Mask Poset::maximal_elements() const { return maximal_in(all()); }

Mask Poset::maximal_lower_bounds(Mask b) const {
    Mask lower = all();
    for (int i = 0; i < n_; ++i)
        if (has(b, i)) lower &= down_[i];
    return maximal_in(lower);
}

MinAbove Poset::min_above(Mask a, int x) const {
    MinAbove r;
    Mask s = a & up_[x];
    r.minimals = minimal_in(s);
    // In a finite poset a unique minimal element is the minimum.
    if (popcount(r.minimals) == 1)
        r.element = std::countr_zero(r.minimals);
    return r;
}

Mask Poset::covered_by_unique() const {
    Mask out = 0;
    for (int i = 0; i < n_; ++i)
        if (popcount(cover_up_[i]) == 1) out |= bit(i);
    return out;
}

std::optional<int> Poset::greatest() const {
    Mask m = maximal_elements();
    if (popcount(m) == 1) return std::countr_zero(m);
    return std::nullopt;
}

std::optional<LatticeWitness> Poset::lattice_witness() const {
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y) {
            Mask ub = minimal_in(up_[x] & up_[y]);
            if (popcount(ub) != 1) return LatticeWitness{x, y, true, ub};
            Mask lb = maximal_in(down_[x] & down_[y]);
            if (popcount(lb) != 1) return LatticeWitness{x, y, false, lb};
        }
    return std::nullopt;
}

std::vector<int> Poset::linear_extension() const {
    std::vector<int> indeg(n_, 0), out;
    for (const auto& [x, y] : covers_) ++indeg[y];
    Mask ready = 0;
    for (int i = 0; i < n_; ++i)
        if (indeg[i] == 0) ready |= bit(i);
    while (ready) {
        int v = std::countr_zero(ready);
        ready &= ~bit(v);
        out.push_back(v);
        for (int j = 0; j < n_; ++j)
            if (has(cover_up_[v], j) && --indeg[j] == 0) ready |= bit(j);
    }
    return out;
}

std::string Poset::set_to_string(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i)
        if (has(m, i)) {
            if (!first) s += ", ";
            s += labels_[i];
            first = false;
        }
    return s + "}";
}

namespace {

PosetPtr adjoin(const PosetPtr& p, const std::string& label, bool top) {
    if (p->index_of(label)) throw LabelCollision(label);
    std::vector<std::string> labels;
    if (!top) labels.push_back(label);
    for (const auto& l : p->labels()) labels.push_back(l);
    if (top) labels.push_back(label);

    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [x, y] : p->covers())
        pairs.emplace_back(p->label(x), p->label(y));
    Mask frontier = top ? p->maximal_elements() : p->minimal_in(p->all());
    for (int i = 0; i < p->size(); ++i)
        if (has(frontier, i)) {
            if (top)
                pairs.emplace_back(p->label(i), label);
            else
                pairs.emplace_back(label, p->label(i));
        }
    return Poset::from_covers(std::move(labels), pairs);
}

}  // namespace

PosetPtr adjoin_top(const PosetPtr& p, const std::string& label) { return adjoin(p, label, true); }
PosetPtr adjoin_bottom(const PosetPtr& p, const std::string& label) { return adjoin(p, label, false); }

}  // namespace lcp
