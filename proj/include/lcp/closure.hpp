#pragma once

#include <span>
#include <vector>

#include "lcp/mlb.hpp"
#include "lcp/poset.hpp"

namespace lcp {

// Idempotent monotone extensive self-map of a poset, identified by its
// fixed-point set (which is mlb-closed, and determines the map).
class ClosureRelation {
  public:
    // Checks the three axioms in order and throws NotExtensive /
    // NotMonotone / NotIdempotent with the first witness found.
    static ClosureRelation validate(PosetPtr p, std::vector<int> image);

    // H(x) = min A_{>=x}; throws NotMlbClosed when A is not.
    static ClosureRelation from_closed_set(PosetPtr p, Mask a);

    static ClosureRelation identity(PosetPtr p);

    const PosetPtr& poset() const { return poset_; }
    int apply(int x) const { return image_[x]; }
    const std::vector<int>& image() const { return image_; }
    Mask closed_set() const { return closed_; }

    bool operator==(const ClosureRelation& o) const {
        return poset_ == o.poset_ && image_ == o.image_;
    }

  private:
    ClosureRelation(PosetPtr p, std::vector<int> image);

    PosetPtr poset_;
    std::vector<int> image_;
    Mask closed_ = 0;
};

// Blocks are the H-preimages of fixed points; each block's unique
// greatest element is its leader.
struct ClosurePartition {
    std::vector<std::vector<int>> blocks;  // sorted members, blocks by leader
    std::vector<int> leaders;              // leaders[i] is greatest in blocks[i]
};

ClosurePartition to_partition(const ClosureRelation& h);
bool refines(const ClosurePartition& fine, const ClosurePartition& coarse);

// Pointwise order; agrees with partition refinement and with reverse
// inclusion of closed sets.
bool leq_closure(const ClosureRelation& h, const ClosureRelation& k);

// Join via intersection of closed sets (the default), and via the
// partition join with the round-robin fixpoint map; the two routes are
// checked against each other in tests.
ClosureRelation join(const ClosureRelation& h, const ClosureRelation& k);
ClosureRelation join_via_partitions(const ClosureRelation& h, const ClosureRelation& k);
ClosureRelation join_all(std::span<const ClosureRelation> hs);

// Meet: closed set is the mlb-closure of the union of closed sets.
ClosureRelation meet(const ClosureRelation& h, const ClosureRelation& k);
ClosureRelation meet_all(std::span<const ClosureRelation> hs);

}  // namespace lcp
