#pragma once

#include <string>
#include <vector>

#include "cprime/element_set.hpp"

namespace cprime {

/// Elements demonstrating that a property fails.
///
/// `sets` holds the submodule or ideal(s) involved, in the order the
/// predicate documents (e.g. the two incomparable ideals of a non-chain ring).
struct Witness {
    std::vector<Index> ring_elems;
    std::vector<Index> module_elems;
    std::vector<ElementSet> sets;

    [[nodiscard]] bool empty() const noexcept
    {
        return ring_elems.empty() && module_elems.empty() && sets.empty();
    }
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a decidable property.  A false verdict carries a witness
/// unless the failure is the RM = {0} convention (then `note` says so).
struct Verdict {
    std::string property;
    bool holds = true;
    Witness witness;
    std::string note;

    explicit operator bool() const noexcept { return holds; }

    static Verdict pass(std::string property) { return Verdict{std::move(property), true, {}, {}}; }
    static Verdict fail(std::string property, Witness w, std::string note = {})
    {
        return Verdict{std::move(property), false, std::move(w), std::move(note)};
    }
};

std::string describe(const Witness& w);

}  // namespace cprime
