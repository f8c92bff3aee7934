#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "cprime/classify.hpp"
#include "cprime/radical.hpp"

namespace cprime {

using Json = nlohmann::json;

/// {"name", "size", "zero", "one", "add": [[..]], "mul": [[..]]}
Json ring_to_json(const FiniteRing& r);
/// Shape problems (missing keys, wrong types, ragged tables, indices out of
/// range) raise StructuralError; failed axioms raise ValidationError; a size
/// over `limits.max_ring_size` raises CapacityError.
RingPtr ring_from_json(const Json& j, const Limits& limits = {});

/// Looks up a ring referenced by name from a module document.
using RingResolver = std::function<std::optional<RingPtr>(const std::string&)>;

/// {"ring": name or inline ring, "size", "zero", "add", "act"} with "act"
/// indexed ring-first.  Optional "name" and "expected" ({prop: bool}).
/// `inline_ring` embeds the ring document instead of its name.
Json module_to_json(const FiniteModule& m, bool inline_ring = true);

struct LoadedModule {
    FiniteModule module;
    std::map<std::string, bool> expected;
};

/// Validated module.  Errors as for `ring_from_json`; an unknown ring name is
/// a StructuralError.
LoadedModule module_from_json(const Json& j, const RingResolver& resolve, const Limits& limits = {},
                              const std::string& default_name = "module");

/// {"ring_elems", "module_elems", "submodule"}, plus "sets" when the witness
/// holds more than one set and "note" when the verdict has one.
Json witness_to_json(const Verdict& v);

/// {"schema": 1, "module", "verdicts": {prop: bool}, "witnesses": {prop: {...}},
///  "cross_checks": {name: bool}}
Json report_to_json(const ClassificationReport& rep);

Json radical_report_to_json(const RadicalReport& rep);
Json torsion_report_to_json(const TorsionTheoryReport& rep);

/// Reads and parses a file; StructuralError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace cprime
