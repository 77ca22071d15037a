#pragma once

#include <string>
#include <vector>

#include "lcp/poset.hpp"

// Named test posets, covers as (x, y) with y covering x.
namespace fixtures {

inline lcp::PosetPtr chain3() {
    return lcp::Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

inline lcp::PosetPtr lambda() {
    return lcp::Poset::from_covers({"x", "y", "t"}, {{"x", "t"}, {"y", "t"}});
}

inline lcp::PosetPtr vee() {
    return lcp::Poset::from_covers({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
}

inline lcp::PosetPtr diamond() {
    return lcp::Poset::from_covers({"z", "a", "b", "w"},
                                   {{"z", "a"}, {"z", "b"}, {"a", "w"}, {"b", "w"}});
}

inline lcp::PosetPtr bowtie1() {
    return lcp::Poset::from_covers(
        {"c", "d", "a", "b", "t"},
        {{"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}, {"a", "t"}, {"b", "t"}});
}

inline lcp::PosetPtr antichain2() { return lcp::Poset::from_covers({"a", "b"}, {}); }

inline std::vector<lcp::PosetPtr> all() {
    return {chain3(), lambda(), vee(), diamond(), bowtie1(), antichain2()};
}

// Mask of the named elements; aborts the test on a bad name via throw.
inline lcp::Mask set_of(const lcp::PosetPtr& p, std::initializer_list<const char*> names) {
    lcp::Mask m = 0;
    for (const char* name : names) {
        auto i = p->index_of(name);
        if (!i) throw lcp::UnknownLabel(name);
        m |= lcp::bit(*i);
    }
    return m;
}

inline int idx(const lcp::PosetPtr& p, const char* name) {
    auto i = p->index_of(name);
    if (!i) throw lcp::UnknownLabel(name);
    return *i;
}

}  // namespace fixtures
