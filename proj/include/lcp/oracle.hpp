#pragma once

#include <cstdint>
#include <vector>

#include "lcp/closure.hpp"
#include "lcp/poset.hpp"

// Deliberately naive reference implementations. They share only the
// poset primitives with the fast paths and re-derive everything else.
namespace lcp::oracle {

// All |P|^|P| maps filtered by the three closure axioms.
std::vector<ClosureRelation> enumerate_closures_naive(const PosetPtr& p, int size_cap = 7);

// Literal intersection over every mlb-closed superset among 2^|P| subsets.
Mask mlb_closure_by_intersection(const Poset& p, Mask a, int size_cap = 16);

// Common refinement in Π(P); canonical: members ascending, blocks
// sorted lexicographically.
std::vector<std::vector<int>> partition_meet(const ClosurePartition& a,
                                             const ClosurePartition& b);

struct RandomPosetSpec {
    int size = 1;
    double edge_probability = 0.3;
    std::uint64_t seed = 0;
    bool require_top = false;
};

// Random DAG on labeled nodes p0..p{n-1}, edge i->j (i<j) with the given
// probability; deterministic in the seed.
PosetPtr random_poset(const RandomPosetSpec& spec);

}  // namespace lcp::oracle
