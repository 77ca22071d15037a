#pragma once

#include <optional>
#include <vector>

#include "lcp/poset.hpp"

namespace lcp {

constexpr int kDefaultSizeCap = 20;

// B ⊆ A whose maximal lower bounds escape A.
struct MlbViolation {
    Mask subset;
    Mask escaped;
};

struct AntiExchangeWitness {
    Mask closed_set;
    int x, y;
};

struct AntiExchangeResult {
    bool ok = true;
    std::optional<AntiExchangeWitness> witness;
};

// A is mlb-closed iff mlb(B) ⊆ A for every B ⊆ A, including B = ∅.
bool is_mlb_closed(const Poset& p, Mask a);
std::optional<MlbViolation> mlb_violation(const Poset& p, Mask a);

// Least mlb-closed superset, by fixpoint over all subsets of the
// working set (general posets are not meet-semilattices, so pairwise
// generation is not assumed sufficient).
Mask mlb_closure(const Poset& p, Mask a);

// All mlb-closed sets between M̄ and P, ordered by inclusion.
struct MlbClosedFamily {
    PosetPtr poset;
    Mask base = 0;                            // M̄
    std::vector<Mask> sets;                   // sorted by (size desc, mask)
    std::vector<std::pair<int, int>> hasse;   // (i, j): sets[i] ⊂ sets[j], an inclusion cover
};

MlbClosedFamily enumerate_closed_interval(const PosetPtr& p, int size_cap = kDefaultSizeCap);

// Every mlb-closed subset of P (not just the interval above M̄).
std::vector<Mask> all_mlb_closed_sets(const Poset& p, int size_cap = kDefaultSizeCap);

// Anti-exchange over the full closed-set family; ok is guaranteed true,
// a witness signals an implementation bug.
AntiExchangeResult check_anti_exchange(const Poset& p, int size_cap = kDefaultSizeCap);

}  // namespace lcp
