#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcp/closure.hpp"
#include "lcp/mlb.hpp"
#include "lcp/polynomial.hpp"
#include "lcp/poset.hpp"

namespace lcp {

struct CheckResult {
    bool ok = true;
    std::string witness;
};

// The lattice of all closure relations on P, built through the
// mlb-closed-set interval. Node order is reverse inclusion of closed
// sets; node 0 is the identity closure (bottom).
class LcLattice {
  public:
    static LcLattice build(PosetPtr p, int size_cap = kDefaultSizeCap);

    const PosetPtr& poset() const { return poset_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const ClosureRelation& node(int i) const { return nodes_[i]; }
    Mask closed_set(int i) const { return closed_[i]; }
    std::optional<int> node_of(Mask closed) const;

    int bottom() const { return 0; }
    int top() const { return node_count() - 1; }

    bool leq(int i, int j) const { return (closed_[j] & ~closed_[i]) == 0; }
    bool covers(int i, int j) const;  // j covers i
    std::vector<int> upper_covers(int i) const;
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

    int rank(int i) const { return rank_[i]; }
    long long mobius(int i) const { return mobius_[i]; }  // μ(0̂, i)

    int join(int i, int j) const;  // closed-set intersection
    int meet(int i, int j) const;  // mlb-closure of the union

    std::vector<int> atoms() const;
    Polynomial characteristic_polynomial() const;

  private:
    LcLattice() = default;

    PosetPtr poset_;
    std::vector<ClosureRelation> nodes_;
    std::vector<Mask> closed_;
    std::vector<std::pair<int, int>> hasse_;
    std::vector<int> rank_;
    std::vector<long long> mobius_;
};

// (λ-1)^s λ^(|P|-m-s) from P alone, no lattice build.
Polynomial closed_form_char_poly(const Poset& p);

// Every interval [q, join of upper covers of q] is a Boolean algebra.
CheckResult check_join_distributive(const LcLattice& l);
// q, r covering q∧r implies q∨r covers q and r.
CheckResult check_semimodular(const LcLattice& l);

// Stanley's modularity condition over all pairs K <= K'.
bool is_modular_bruteforce(const LcLattice& l, int node);

// Theorem-9 cover property; requires a greatest element of P.
bool has_cover_property(const ClosureRelation& h);

// Maximal chain of modular closures, bottom (identity) to top, built
// from a linear extension. Works with or without a greatest element.
std::vector<ClosureRelation> m_chain(const PosetPtr& p);

struct SublatticeResult {
    bool via_lattice_test;   // route (a): 0̂+P is a lattice
    bool via_partition_meet; // route (b): Π(P)-meets agree with LC(P)-meets
    std::string witness;     // populated when either route is false
    bool agree() const { return via_lattice_test == via_partition_meet; }
    bool ok() const { return via_lattice_test && via_partition_meet; }
};

// Requires a greatest element (NoGreatestElement otherwise).
SublatticeResult check_sublattice_of_partitions(const PosetPtr& p, int size_cap = kDefaultSizeCap);

}  // namespace lcp
