#include "cprime/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "cprime/errors.hpp"

namespace cprime {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw StructuralError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw StructuralError(std::string("missing field \"") + key + "\"");
    return *it;
}

Index integer(const Json& j, const char* what)
{
    if (!j.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v > std::numeric_limits<Index>::max()) throw StructuralError(std::string(what) + " out of range");
    return static_cast<Index>(v);
}

/// rows x cols table flattened row-major; every entry must index a column.
std::vector<Index> table(const Json& j, Index rows, Index cols, const char* what)
{
    if (!j.is_array() || j.size() != static_cast<std::size_t>(rows)) {
        throw StructuralError(std::string(what) + " must have " + std::to_string(rows) + " rows");
    }
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
            throw StructuralError(std::string(what) + " is ragged: every row needs " + std::to_string(cols) + " entries");
        }
        for (const auto& v : row) {
            const Index x = integer(v, what);
            if (x >= cols) {
                throw StructuralError(std::string(what) + " entry " + std::to_string(x) + " out of range");
            }
            out.push_back(x);
        }
    }
    return out;
}

Json rows(const std::vector<Index>& flat, Index cols)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < flat.size(); i += static_cast<std::size_t>(cols)) {
        out.push_back(std::vector<Index>(flat.begin() + static_cast<std::ptrdiff_t>(i),
                                         flat.begin() + static_cast<std::ptrdiff_t>(i) + cols));
    }
    return out;
}

Index bounded_size(const Json& j, Index bound, const char* what)
{
    const Index n = integer(field(j, "size"), "size");
    if (n < 1) throw StructuralError(std::string(what) + " size must be positive");
    if (n > bound) {
        throw CapacityError(std::string(what) + " size " + std::to_string(n) + " exceeds the bound " +
                            std::to_string(bound));
    }
    return n;
}

}  // namespace

Json ring_to_json(const FiniteRing& r)
{
    return Json{{"name", r.name()},
                {"size", r.size()},
                {"zero", r.zero()},
                {"one", r.one()},
                {"add", rows(r.add_table(), r.size())},
                {"mul", rows(r.mul_table(), r.size())}};
}

RingPtr ring_from_json(const Json& j, const Limits& limits)
{
    const Index n = bounded_size(j, limits.max_ring_size, "ring");
    const auto& name_field = field(j, "name");
    if (!name_field.is_string()) throw StructuralError("ring name must be a string");
    auto add = table(field(j, "add"), n, n, "add");
    auto mul = table(field(j, "mul"), n, n, "mul");
    const Index zero = integer(field(j, "zero"), "zero");
    const Index one = integer(field(j, "one"), "one");
    if (zero >= n || one >= n) throw StructuralError("zero/one out of range");
    return validated(FiniteRing(name_field.get<std::string>(), n, std::move(add), std::move(mul), zero, one));
}

Json module_to_json(const FiniteModule& m, bool inline_ring)
{
    Json j{{"name", m.name()},
           {"size", m.size()},
           {"zero", m.zero()},
           {"add", rows(m.add_table(), m.size())},
           {"act", rows(m.act_table(), m.size())}};
    j["ring"] = inline_ring ? ring_to_json(m.ring()) : Json(m.ring().name());
    return j;
}

LoadedModule module_from_json(const Json& j, const RingResolver& resolve, const Limits& limits,
                              const std::string& default_name)
{
    const auto& ring_field = field(j, "ring");
    RingPtr ring;
    if (ring_field.is_string()) {
        auto found = resolve ? resolve(ring_field.get<std::string>()) : std::nullopt;
        if (!found) throw StructuralError("unknown ring \"" + ring_field.get<std::string>() + "\"");
        ring = *found;
    } else {
        ring = ring_from_json(ring_field, limits);
    }
    const Index n = bounded_size(j, limits.max_module_size, "module");
    std::string name = default_name;
    if (auto it = j.find("name"); it != j.end()) {
        if (!it->is_string()) throw StructuralError("module name must be a string");
        name = it->get<std::string>();
    }
    auto add = table(field(j, "add"), n, n, "add");
    auto act = table(field(j, "act"), ring->size(), n, "act");
    const Index zero = integer(field(j, "zero"), "zero");
    if (zero >= n) throw StructuralError("zero out of range");

    std::map<std::string, bool> expected;
    if (auto it = j.find("expected"); it != j.end()) {
        if (!it->is_object()) throw StructuralError("\"expected\" must be an object of booleans");
        for (const auto& [k, v] : it->items()) {
            if (!v.is_boolean()) throw StructuralError("expected verdict \"" + k + "\" must be a boolean");
            expected[k] = v.get<bool>();
        }
    }
    return LoadedModule{make_module_from_tables(ring, std::move(name), n, std::move(add), std::move(act), zero),
                        std::move(expected)};
}

Json witness_to_json(const Verdict& v)
{
    const auto& w = v.witness;
    Json j{{"ring_elems", w.ring_elems},
           {"module_elems", w.module_elems},
           {"submodule", w.sets.empty() ? std::vector<Index>{} : w.sets.front().members()}};
    if (w.sets.size() > 1) {
        Json sets = Json::array();
        for (const auto& s : w.sets) sets.push_back(s.members());
        j["sets"] = sets;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json report_to_json(const ClassificationReport& rep)
{
    Json verdicts = Json::object(), witnesses = Json::object(), cross = Json::object();
    for (const auto& v : rep.verdicts) {
        verdicts[v.property] = v.holds;
        if (!v.holds) witnesses[v.property] = witness_to_json(v);
    }
    for (const auto& v : rep.cross_checks) cross[v.property] = v.holds;
    return Json{{"schema", 1}, {"module", rep.module}, {"verdicts", verdicts}, {"witnesses", witnesses},
                {"cross_checks", cross}};
}

Json radical_report_to_json(const RadicalReport& rep)
{
    Json contributors = Json::array();
    for (const auto& c : rep.contributors) contributors.push_back(c.members());
    return Json{{"schema", 1},
                {"module", rep.module},
                {"kind", std::string(to_string(rep.kind))},
                {"result", rep.result.members()},
                {"contributors", contributors},
                {"convention_applied", rep.convention_applied}};
}

Json torsion_report_to_json(const TorsionTheoryReport& rep)
{
    Json axioms = Json::array();
    for (const auto& v : rep.axioms) axioms.push_back(Json{{"axiom", v.property}, {"holds", v.holds}, {"note", v.note}});
    return Json{{"schema", 1},
                {"kind", std::string(to_string(rep.kind))},
                {"universe", rep.universe},
                {"torsion_class", rep.torsion_class},
                {"torsionfree_class", rep.torsionfree_class},
                {"axioms", axioms}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

}  // namespace cprime
