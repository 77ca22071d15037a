#include "lcp/dot.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace lcp {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void emit_poset_dot(std::ostream& out, const Poset& p) {
    out << "digraph poset {\n  rankdir=BT;\n";
    for (int i : p.linear_extension()) out << "  " << quoted(p.label(i)) << ";\n";
    auto covers = p.covers();
    std::sort(covers.begin(), covers.end());
    for (const auto& [x, y] : covers)
        out << "  " << quoted(p.label(x)) << " -> " << quoted(p.label(y)) << ";\n";
    out << "}\n";
}

void emit_lattice_dot(std::ostream& out, const LcLattice& l, bool with_mu) {
    const Poset& p = *l.poset();
    std::vector<int> order(l.node_count());
    for (int i = 0; i < l.node_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (l.rank(a) != l.rank(b)) return l.rank(a) < l.rank(b);
        return p.set_to_string(l.closed_set(a)) < p.set_to_string(l.closed_set(b));
    });
    out << "digraph lc_lattice {\n  rankdir=BT;\n";
    for (int i : order) {
        std::string label = p.set_to_string(l.closed_set(i));
        if (with_mu) label += "\\nμ=" + std::to_string(l.mobius(i));
        out << "  n" << i << " [label=" << quoted(label) << "];\n";
    }
    auto hasse = l.hasse();
    std::sort(hasse.begin(), hasse.end());
    for (const auto& [lo, hi] : hasse) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
}

}  // namespace lcp
