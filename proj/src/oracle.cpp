#include "lcp/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace lcp::oracle {

std::vector<ClosureRelation> enumerate_closures_naive(const PosetPtr& p, int size_cap) {
    const int n = p->size();
    if (n > size_cap)
        throw SizeLimit("naive closure enumeration over " + std::to_string(n) +
                        " elements exceeds cap " + std::to_string(size_cap));
    std::vector<ClosureRelation> out;
    std::vector<int> image(n, 0);
    // Odometer over all n^n maps.
    while (true) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = p->leq(x, image[x]) && image[image[x]] == image[x];
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (p->leq(x, y)) ok = p->leq(image[x], image[y]);
        if (ok) out.push_back(ClosureRelation::validate(p, image));
        int i = n - 1;
        while (i >= 0 && image[i] == n - 1) image[i--] = 0;
        if (i < 0) break;
        ++image[i];
    }
    return out;
}

Mask mlb_closure_by_intersection(const Poset& p, Mask a, int size_cap) {
    if (p.size() > size_cap)
        throw SizeLimit("intersection oracle over " + std::to_string(p.size()) +
                        " elements exceeds cap " + std::to_string(size_cap));
    Mask result = p.all();
    for (Mask c = 0;; ++c) {
        if ((a & ~c) == 0) {
            // c ⊇ a; keep it only if mlb-closed: every B ⊆ c has mlb(B) ⊆ c.
            bool closed = true;
            Mask b = c;
            while (closed) {
                if (p.maximal_lower_bounds(b) & ~c) closed = false;
                if (b == 0) break;
                b = (b - 1) & c;
            }
            if (closed) result &= c;
        }
        if (c == p.all()) break;
    }
    return result;
}

std::vector<std::vector<int>> partition_meet(const ClosurePartition& a,
                                             const ClosurePartition& b) {
    std::map<int, int> cell_a, cell_b;
    for (int i = 0; i < static_cast<int>(a.blocks.size()); ++i)
        for (int x : a.blocks[i]) cell_a[x] = i;
    for (int i = 0; i < static_cast<int>(b.blocks.size()); ++i)
        for (int x : b.blocks[i]) cell_b[x] = i;
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (const auto& [x, i] : cell_a) cells[{i, cell_b.at(x)}].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [key, cell] : cells) {
        std::sort(cell.begin(), cell.end());
        out.push_back(std::move(cell));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PosetPtr random_poset(const RandomPosetSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::string> labels;
    for (int i = 0; i < spec.size; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < spec.size; ++i)
        for (int j = i + 1; j < spec.size; ++j)
            if (coin(rng) < spec.edge_probability) pairs.emplace_back(labels[i], labels[j]);
    PosetPtr p = Poset::from_covers(labels, pairs);
    if (spec.require_top && !p->greatest()) p = adjoin_top(p);
    return p;
}

}  // namespace lcp::oracle
