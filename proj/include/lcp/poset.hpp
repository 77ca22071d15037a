#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcp/errors.hpp"

namespace lcp {

// Subsets of a poset's ground set are bit masks over element indices.
using Mask = std::uint32_t;

constexpr int kMaxElements = 25;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & 1u; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

// min over A_{>=x}; `element` is -1 when the minimum does not exist,
// and `minimals` then holds the antichain of minimal elements found
// (empty when A_{>=x} itself is empty).
struct MinAbove {
    int element = -1;
    Mask minimals = 0;
    bool found() const { return element >= 0; }
};

// Witness for a failed lattice check: the pair and its set of maximal
// lower bounds (or minimal upper bounds) that is not a singleton.
struct LatticeWitness {
    int x, y;
    bool join_side;  // true: no unique least upper bound
    Mask candidates;
};

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

class Poset {
  public:
    // Builds the poset from cover (or order) pairs: leq is the
    // reflexive-transitive closure, covers are recomputed as the
    // transitive reduction. Throws CycleError / UnknownLabel.
    static PosetPtr from_covers(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

    int size() const { return n_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;

    bool leq(int x, int y) const { return has(up_[x], y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    Mask up(int x) const { return up_[x]; }      // {y : x <= y}
    Mask down(int x) const { return down_[x]; }  // {y : y <= x}
    Mask all() const { return full_mask(n_); }

    // Transitive reduction as pairs (x, y), y covers x.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    Mask upper_covers(int x) const { return cover_up_[x]; }

    Mask maximal_elements() const;
    Mask maximal_in(Mask s) const;  // elements of s maximal within s
    Mask minimal_in(Mask s) const;

    // Maximal elements of the common lower-bound set of b; for b = 0 the
    // lower-bound set is all of P, so this is maximal_elements().
    Mask maximal_lower_bounds(Mask b) const;

    MinAbove min_above(Mask a, int x) const;

    Mask covered_by_unique() const;  // elements with exactly one upper cover
    std::optional<int> greatest() const;

    bool is_lattice() const { return !lattice_witness().has_value(); }
    std::optional<LatticeWitness> lattice_witness() const;

    // Smallest-declared-index-first topological order.
    std::vector<int> linear_extension() const;

    std::string set_to_string(Mask m) const;  // "{a, b, c}" in index order

  private:
    Poset() = default;

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Mask> up_, down_, cover_up_;
    std::vector<std::pair<int, int>> covers_;
};

PosetPtr adjoin_top(const PosetPtr& p, const std::string& label = "^1");
PosetPtr adjoin_bottom(const PosetPtr& p, const std::string& label = "^0");

}  // namespace lcp
