// Command-line front end: catalog listing, classification, lattices,
// radicals and theorem verification.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "cprime/catalog.hpp"
#include "cprime/errors.hpp"
#include "cprime/json_io.hpp"
#include "cprime/verify.hpp"

using namespace cprime;

namespace {

struct Options {
    Index max_ring_size = 16;
    Index max_module_size = 64;
    bool json = false;
    std::string ring_file;
    std::string module_file;
    std::string entry;
    std::string catalog = "all";
    std::string kind = "all";
    std::string checks = "all";
    std::string output;
    std::vector<std::string> module_files;
    std::vector<std::string> entries;
};

Limits limits_of(const Options& o)
{
    Limits l;
    l.max_ring_size = o.max_ring_size;
    l.max_module_size = o.max_module_size;
    return l;
}

std::vector<CatalogEntry> catalog_of(const Options& o)
{
    const CatalogBounds bounds{o.max_ring_size, o.max_module_size};
    if (o.catalog == "pinned") return build_pinned_catalog();
    if (o.catalog == "generated") return generate_small_instances(bounds);
    return full_catalog(bounds);
}

RingResolver resolver_of(const Options& o, const Limits& limits)
{
    std::optional<RingPtr> file_ring;
    if (!o.ring_file.empty()) file_ring = ring_from_json(read_json_file(o.ring_file), limits);
    return [file_ring, limits](const std::string& name) -> std::optional<RingPtr> {
        if (file_ring && (*file_ring)->name() == name) return file_ring;
        return builtin_ring(name, limits);
    };
}

CatalogEntry load_module_entry(const std::string& path, const Options& o)
{
    const auto limits = limits_of(o);
    auto loaded = module_from_json(read_json_file(path), resolver_of(o, limits), limits, path);
    std::string name = loaded.module.name();
    return CatalogEntry{std::move(name), std::move(loaded.module), std::move(loaded.expected), "file: " + path, true, {}};
}

/// The module a single-target subcommand works on: --module, --entry, or the
/// regular module of --ring.
FiniteModule target_module(const Options& o)
{
    if (!o.module_file.empty()) return load_module_entry(o.module_file, o).module;
    if (!o.entry.empty()) {
        const auto catalog = full_catalog(CatalogBounds{o.max_ring_size, o.max_module_size});
        const auto* e = find_entry(catalog, o.entry);
        if (e == nullptr) throw std::invalid_argument("no catalog entry named " + o.entry);
        return e->module;
    }
    if (!o.ring_file.empty()) return make_regular_module(ring_from_json(read_json_file(o.ring_file), limits_of(o)));
    throw std::invalid_argument("give --module FILE, --entry NAME or --ring FILE");
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_catalog_list(const Options& o)
{
    const auto catalog = catalog_of(o);
    if (o.json) {
        Json out = Json::array();
        for (const auto& e : catalog) {
            out.push_back(Json{{"name", e.name},
                               {"ring", e.module.ring().name()},
                               {"size", e.module.size()},
                               {"provenance", e.provenance},
                               {"genuine_module", e.genuine_module},
                               {"expected", e.expected},
                               {"notes", e.notes}});
        }
        print_json(Json{{"schema", 1}, {"entries", out}});
        return 0;
    }
    for (const auto& e : catalog) {
        std::cout << std::left << std::setw(28) << e.name << std::setw(10) << e.module.ring().name() << std::right
                  << std::setw(4) << e.module.size() << "  " << e.provenance << (e.genuine_module ? "" : " [not a module]")
                  << '\n';
        for (const auto& n : e.notes) std::cout << "    note: " << n << '\n';
    }
    std::cout << catalog.size() << " entries\n";
    return 0;
}

int cmd_classify(const Options& o)
{
    const auto m = target_module(o);
    const auto rep = classify(m);
    if (o.json) {
        print_json(report_to_json(rep));
        return 0;
    }
    std::cout << "module " << m.name() << " over " << m.ring().name() << ", " << m.size() << " elements"
              << (m.is_module() ? "" : " (fails a module axiom)") << '\n';
    for (const auto& v : rep.verdicts) {
        std::cout << "  " << std::left << std::setw(24) << v.property << (v.holds ? "T" : "F");
        if (!v.holds) std::cout << "  " << describe(v.witness) << (v.note.empty() ? "" : "  " + v.note);
        std::cout << '\n';
    }
    for (const auto& c : rep.cross_checks) {
        std::cout << "  cross-check " << c.property << ": " << (c.holds ? "agree" : "DISAGREE " + c.note) << '\n';
    }
    return 0;
}

int cmd_lattice(const Options& o)
{
    const auto m = target_module(o);
    const auto& lattice = enumerate_submodules(m);
    if (o.json) {
        Json subs = Json::array();
        for (const auto& n : lattice) subs.push_back(n.members());
        print_json(Json{{"schema", 1}, {"module", m.name()}, {"submodules", subs}});
        return 0;
    }
    std::cout << m.name() << ": " << lattice.size() << " submodules\n";
    for (const auto& n : lattice) std::cout << "  " << n.to_string() << '\n';
    return 0;
}

int cmd_radical(const Options& o)
{
    const auto m = target_module(o);
    std::vector<RadicalKind> kinds{RadicalKind::prime, RadicalKind::completely_prime,
                                   RadicalKind::faithful_completely_prime};
    if (o.kind != "all") kinds = {radical_kind_from_string(o.kind)};
    Json out = Json::array();
    for (auto k : kinds) {
        const auto rep = radical(m, k);
        if (o.json) {
            out.push_back(radical_report_to_json(rep));
            continue;
        }
        std::cout << std::left << std::setw(26) << to_string(k) << rep.result.to_string()
                  << (rep.convention_applied ? "  (no qualifying submodule, result = M)" : "") << "  from "
                  << rep.contributors.size() << " submodule(s)\n";
    }
    if (o.json) print_json(out);
    return 0;
}

int cmd_verify(const Options& o)
{
    RunManifest manifest;
    manifest.limits = limits_of(o);
    manifest.checks = parse_check_list(o.checks);
    if (!o.module_files.empty() || !o.entries.empty()) {
        const auto catalog = full_catalog(CatalogBounds{o.max_ring_size, o.max_module_size});
        for (const auto& name : o.entries) {
            const auto* e = find_entry(catalog, name);
            if (e == nullptr) throw std::invalid_argument("no catalog entry named " + name);
            manifest.entries.push_back(*e);
        }
        for (const auto& f : o.module_files) manifest.entries.push_back(load_module_entry(f, o));
    } else {
        manifest.entries = catalog_of(o);
    }
    const auto rep = run_verification(manifest);
    const std::string text = o.json ? verification_report_to_json(rep).dump(2) + "\n" : format_verification_text(rep);
    if (!o.output.empty()) {
        std::ofstream f(o.output);
        if (!f) throw std::invalid_argument("cannot write " + o.output);
        f << verification_report_to_json(rep).dump(2) << '\n';
    }
    std::cout << text;
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite rings and modules: primeness classification and theorem checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--max-ring-size", o.max_ring_size, "Largest ring accepted or generated")->check(CLI::PositiveNumber);
    app.add_option("--max-module-size", o.max_module_size, "Largest module accepted or generated")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("--ring", o.ring_file, "Ring JSON file");

    const auto target_options = [&](CLI::App* sub) {
        sub->add_option("--module", o.module_file, "Module JSON file");
        sub->add_option("--entry", o.entry, "Catalog entry name");
    };

    auto* catalog = app.add_subcommand("catalog", "Built-in instances");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List catalog entries");
    list->add_option("--catalog", o.catalog, "pinned, generated or all")
        ->check(CLI::IsMember({"pinned", "generated", "all"}));

    auto* classify_cmd = app.add_subcommand("classify", "Every primeness verdict of one module");
    target_options(classify_cmd);
    auto* lattice = app.add_subcommand("lattice", "Submodule lattice of one module");
    target_options(lattice);
    auto* radical_cmd = app.add_subcommand("radical", "Prime, completely prime and faithful completely prime radicals");
    target_options(radical_cmd);
    radical_cmd->add_option("--kind", o.kind, "prime, completely_prime, faithful_completely_prime or all");

    auto* verify = app.add_subcommand("verify", "Check stated implications over catalog entries");
    verify->add_option("--module", o.module_files, "Module JSON file (repeatable)");
    verify->add_option("--entry", o.entries, "Catalog entry name (repeatable)");
    verify->add_option("--catalog", o.catalog, "pinned, generated or all")
        ->check(CLI::IsMember({"pinned", "generated", "all"}));
    verify->add_option("--checks", o.checks, "Comma-separated check names, or all");
    verify->add_option("--output", o.output, "Also write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*list) return cmd_catalog_list(o);
        if (*classify_cmd) return cmd_classify(o);
        if (*lattice) return cmd_lattice(o);
        if (*radical_cmd) return cmd_radical(o);
        if (*verify) return cmd_verify(o);
    } catch (const std::runtime_error& e) {
        // Structural, validation, capacity and precondition errors.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
