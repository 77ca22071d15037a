#include "lcp/mlb.hpp"

#include <algorithm>

namespace lcp {

std::optional<MlbViolation> mlb_violation(const Poset& p, Mask a) {
    // Submask walk includes B = ∅ (handled after the loop body rolls over).
    Mask b = a;
    while (true) {
        Mask escaped = p.maximal_lower_bounds(b) & ~a;
        if (escaped) return MlbViolation{b, escaped};
        if (b == 0) break;
        b = (b - 1) & a;
    }
    return std::nullopt;
}

bool is_mlb_closed(const Poset& p, Mask a) { return !mlb_violation(p, a).has_value(); }

Mask mlb_closure(const Poset& p, Mask a) {
    Mask cur = a | p.maximal_elements();
    while (true) {
        Mask next = cur;
        Mask b = cur;
        while (true) {
            next |= p.maximal_lower_bounds(b);
            if (b == 0) break;
            b = (b - 1) & cur;
        }
        if (next == cur) return cur;
        cur = next;
    }
}

MlbClosedFamily enumerate_closed_interval(const PosetPtr& p, int size_cap) {
    MlbClosedFamily fam;
    fam.poset = p;
    fam.base = mlb_closure(*p, 0);
    Mask free = p->all() & ~fam.base;
    if (popcount(free) > size_cap)
        throw SizeLimit("interval enumeration over " + std::to_string(popcount(free)) +
                        " free elements exceeds cap " + std::to_string(size_cap));

    Mask sub = free;
    while (true) {
        Mask candidate = fam.base | sub;
        if (is_mlb_closed(*p, candidate)) fam.sets.push_back(candidate);
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    std::sort(fam.sets.begin(), fam.sets.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
        return a < b;
    });

    const int n = static_cast<int>(fam.sets.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mask lo = fam.sets[i], hi = fam.sets[j];
            if (lo == hi || (lo & ~hi)) continue;  // need lo ⊂ hi
            bool covered = true;
            for (int k = 0; k < n && covered; ++k) {
                Mask mid = fam.sets[k];
                if (mid != lo && mid != hi && (lo & ~mid) == 0 && (mid & ~hi) == 0)
                    covered = false;
            }
            if (covered) fam.hasse.emplace_back(i, j);
        }
    return fam;
}

std::vector<Mask> all_mlb_closed_sets(const Poset& p, int size_cap) {
    if (p.size() > size_cap)
        throw SizeLimit("closed-set enumeration over " + std::to_string(p.size()) +
                        " elements exceeds cap " + std::to_string(size_cap));
    std::vector<Mask> out;
    for (Mask a = 0; a <= p.all(); ++a) {
        if (is_mlb_closed(p, a)) out.push_back(a);
        if (a == p.all()) break;
    }
    return out;
}

AntiExchangeResult check_anti_exchange(const Poset& p, int size_cap) {
    AntiExchangeResult r;
    for (Mask a : all_mlb_closed_sets(p, size_cap)) {
        Mask outside = p.all() & ~a;
        for (int x = 0; x < p.size(); ++x) {
            if (!has(outside, x)) continue;
            Mask with_x = mlb_closure(p, a | bit(x));
            for (int y = 0; y < p.size(); ++y) {
                if (y == x || !has(outside, y)) continue;
                if (has(mlb_closure(p, a | bit(y)), x) && has(with_x, y)) {
                    r.ok = false;
                    r.witness = AntiExchangeWitness{a, x, y};
                    return r;
                }
            }
        }
    }
    return r;
}

}  // namespace lcp
