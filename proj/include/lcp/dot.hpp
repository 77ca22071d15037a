#pragma once

#include <iosfwd>

#include "lcp/lattice.hpp"
#include "lcp/poset.hpp"

namespace lcp {

// Hasse diagram of P: deterministic node order, edges oriented upward
// (cover source -> cover target).
void emit_poset_dot(std::ostream& out, const Poset& p);

// Hasse diagram of LC(P); nodes labeled by closed set and sorted by
// (rank, label), optionally annotated with μ(0̂, ·).
void emit_lattice_dot(std::ostream& out, const LcLattice& l, bool with_mu);

}  // namespace lcp
