#pragma once

#include <unordered_set>
#include <vector>

#include "cprime/element_set.hpp"

namespace cprime::detail {

/// Additive subgroup generated by `seed` (plus `zero`) under a binary `add`.
template <class Add>
ElementSet additive_closure(ElementSet seed, Index zero, Add&& add)
{
    seed.insert(zero);
    std::vector<Index> frontier = seed.members();
    std::vector<Index> all = frontier;
    while (!frontier.empty()) {
        std::vector<Index> next;
        for (Index x : frontier) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                Index s = add(x, all[j]);
                if (!seed.contains(s)) {
                    seed.insert(s);
                    next.push_back(s);
                    all.push_back(s);
                }
            }
        }
        frontier = std::move(next);
    }
    return seed;
}

/// A + B = { a + b } for additive subgroups A, B.
template <class Add>
ElementSet subgroup_sum(const ElementSet& a, const ElementSet& b, Add&& add)
{
    ElementSet out = a;
    const auto am = a.members();
    for (Index y : b.members()) {
        if (a.contains(y)) continue;
        for (Index x : am) out.insert(add(x, y));
    }
    return out;
}

/// Every sum of members of `cyclic`, found by joining each discovered set
/// with each cyclic generator until fixpoint.  Result in canonical order.
template <class Add>
std::vector<ElementSet> join_closure(const std::vector<ElementSet>& cyclic, const ElementSet& zero_set, Add&& add)
{
    std::vector<ElementSet> gens;
    std::unordered_set<ElementSet, ElementSetHash> gen_seen;
    for (const auto& c : cyclic) {
        if (gen_seen.insert(c).second) gens.push_back(c);
    }
    std::vector<ElementSet> found{zero_set};
    std::unordered_set<ElementSet, ElementSetHash> seen{zero_set};
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& g : gens) {
            if (g.subset_of(found[i])) continue;
            ElementSet s = subgroup_sum(found[i], g, add);
            if (seen.insert(s).second) found.push_back(std::move(s));
        }
    }
    sort_canonical(found);
    return found;
}

}  // namespace cprime::detail
