#pragma once

#include <iosfwd>
#include <string>

#include "lcp/closure.hpp"
#include "lcp/poset.hpp"

namespace lcp {

// Poset text format: one declaration per line.
//   elem a b c ...   declares elements in tie-break order
//   a < b            declares a cover or order pair
//   # comment        blank lines ignored
// Labels are non-whitespace tokens without '<' or '#'.
PosetPtr parse_poset(std::istream& in);
PosetPtr parse_poset_file(const std::string& path);

std::string format_poset(const Poset& p);

// Closure text form: either "x -> H(x)" per line, or a single
// "closed: {a, b, c}" line.
ClosureRelation parse_closure(std::istream& in, const PosetPtr& p);
ClosureRelation parse_closure_file(const std::string& path, const PosetPtr& p);

}  // namespace lcp
