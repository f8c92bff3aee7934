#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cprime/module.hpp"

namespace cprime {

struct CatalogEntry {
    std::string name;
    FiniteModule module;
    /// Pinned verdicts by property name; empty for generated entries.
    std::map<std::string, bool> expected;
    /// Where the entry comes from ("pinned: ..." or "generated: ...").
    std::string provenance;
    /// False for an action structure that fails a module axiom.  Such entries
    /// are classified but kept out of every theorem sweep.
    bool genuine_module = true;
    std::vector<std::string> notes;
};

/// Size bounds for generated instances.
struct CatalogBounds {
    Index max_ring_size = 16;
    Index max_module_size = 64;
};

/// Z2, Z3, Z4, Z6, Z8, Z9, Z2xZ2, M2(Z2).
std::vector<RingPtr> catalog_rings();

/// Resolves "Z<n>", "M<k>(<ring>)" and "<ring>x<ring>".  Nullopt for anything else.
std::optional<RingPtr> builtin_ring(const std::string& name, const Limits& limits = {});

/// Hand-picked instances with pinned verdicts.
std::vector<CatalogEntry> build_pinned_catalog();

/// For each catalog ring within bounds: the regular module, its quotients by
/// left ideals, and direct sums of two of those within the module bound.
/// Entries with identical tables are kept once (first occurrence).
std::vector<CatalogEntry> generate_small_instances(const CatalogBounds& bounds = {});

/// Pinned entries followed by generated ones not already present.
std::vector<CatalogEntry> full_catalog(const CatalogBounds& bounds = {});

/// Entry by name, or nullptr.
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name);

}  // namespace cprime
