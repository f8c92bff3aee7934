#include "cprime/catalog.hpp"

#include <cctype>

#include "cprime/errors.hpp"
#include "cprime/instances.hpp"

namespace cprime {

namespace {

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

/// Position of the last top-level 'x' (outside parentheses), or npos.
std::size_t top_level_product(const std::string& name)
{
    int depth = 0;
    std::size_t found = std::string::npos;
    for (std::size_t i = 0; i < name.size(); ++i) {
        if (name[i] == '(') ++depth;
        else if (name[i] == ')') --depth;
        else if (name[i] == 'x' && depth == 0) found = i;
    }
    return found;
}

CatalogEntry pinned(FiniteModule m, std::map<std::string, bool> expected, std::string provenance)
{
    std::string name = m.name();
    return CatalogEntry{std::move(name), std::move(m), std::move(expected), "pinned: " + provenance, true, {}};
}

bool already_present(const std::vector<CatalogEntry>& entries, const FiniteModule& m)
{
    return std::any_of(entries.begin(), entries.end(),
                       [&](const CatalogEntry& e) { return e.module.same_tables(m); });
}

}  // namespace

std::vector<RingPtr> catalog_rings()
{
    auto z2 = make_zn(2);
    return {z2,         make_zn(3), make_zn(4), make_zn(6), make_zn(8), make_zn(9), make_product_ring(z2, z2),
            make_matrix_ring(z2, 2)};
}

std::optional<RingPtr> builtin_ring(const std::string& name, const Limits& limits)
{
    try {
        if (name.size() > 1 && name[0] == 'Z' && all_digits(name.substr(1))) {
            if (name.size() > 5) return std::nullopt;
            return make_zn(static_cast<Index>(std::stoi(name.substr(1))), limits);
        }
        if (const auto x = top_level_product(name); x != std::string::npos) {
            auto a = builtin_ring(name.substr(0, x), limits);
            auto b = builtin_ring(name.substr(x + 1), limits);
            if (!a || !b) return std::nullopt;
            return make_product_ring(*a, *b, limits);
        }
        if (name.size() > 3 && name[0] == 'M' && name.back() == ')') {
            const auto open = name.find('(');
            if (open == std::string::npos || !all_digits(name.substr(1, open - 1)) || open > 4) return std::nullopt;
            auto base = builtin_ring(name.substr(open + 1, name.size() - open - 2), limits);
            if (!base) return std::nullopt;
            return make_matrix_ring(*base, static_cast<Index>(std::stoi(name.substr(1, open - 1))), limits);
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<CatalogEntry> build_pinned_catalog()
{
    const auto z2 = make_zn(2);
    const auto m2 = make_matrix_ring(z2, 2);
    std::vector<CatalogEntry> out;

    out.push_back(pinned(make_regular_module(m2), {{"prime", true}, {"completely_prime", false}},
                         "regular module of the 2x2 matrix ring over Z2"));

    auto column = pinned(make_column_module(m2), {{"prime", true}, {"completely_prime", false}, {"simple", true}},
                         "all-ones matrix generating a 4-element left module over M2(Z2)");
    column.notes.push_back("completely_prime witness: integer matrix [[3,3],[2,2]] reduces mod 2 to [[1,1],[0,0]] = "
                           "ring element " + std::to_string(reduce_integer_matrix(*z2, 2, {3, 3, 2, 2})) +
                           "; module element 1 is the all-ones matrix");
    out.push_back(std::move(column));

    auto z4z2 = pinned(make_z4_with_z2_action(z2), {{"completely_coprime", true}},
                       "Z4 with Z2 acting by 0 and the identity");
    z4z2.genuine_module = false;
    z4z2.notes.push_back("not a module: (1+1)*1 = 0 but 1*1 + 1*1 = 2; excluded from theorem sweeps");
    out.push_back(std::move(z4z2));

    const auto z4 = make_zn(4);
    out.push_back(pinned(make_regular_module(z4), {{"completely_prime", false}, {"completely_coprime", false}},
                         "regular module of Z4"));
    out.push_back(pinned(make_regular_module(make_zn(6)), {{"semisimple", true}}, "regular module of Z6 (semisimple)"));
    out.push_back(pinned(make_regular_module(z2), {{"completely_prime", true}}, "regular module of Z2"));
    out.push_back(pinned(make_regular_module(make_zn(3)), {{"completely_prime", true}}, "regular module of Z3"));
    out.push_back(pinned(make_regular_module(make_zn(8)), {{"completely_prime", false}}, "regular module of Z8"));
    out.push_back(pinned(make_regular_module(make_zn(9)), {{"completely_prime", false}}, "regular module of Z9"));
    out.push_back(pinned(make_regular_module(make_product_ring(z2, z2)), {{"completely_prime", false}},
                         "regular module of Z2xZ2"));
    out.push_back(pinned(make_direct_sum(make_regular_module(z2), make_regular_module(z2)),
                         {{"completely_prime", true}, {"simple", false}}, "Z2+Z2 over Z2"));
    out.push_back(pinned(make_reduction_module(z4, 2), {{"torsion_free", false}, {"completely_coprime", true}},
                         "Z2 over Z4 by reduction"));
    return out;
}

std::vector<CatalogEntry> generate_small_instances(const CatalogBounds& bounds)
{
    Limits limits;
    limits.max_module_size = bounds.max_module_size;
    std::vector<CatalogEntry> out;
    const auto add = [&](FiniteModule m, const std::string& how) {
        if (m.size() > bounds.max_module_size || already_present(out, m)) return;
        std::string name = m.name();
        out.push_back(CatalogEntry{std::move(name), std::move(m), {}, "generated: " + how, true, {}});
    };
    for (const auto& r : catalog_rings()) {
        if (r->size() > bounds.max_ring_size) continue;
        const auto reg = make_regular_module(r);
        std::vector<FiniteModule> quotients{reg};
        for (const auto& i : enumerate_left_ideals(*r)) {
            if (i.count() > 1) quotients.push_back(quotient(reg, i).module);
        }
        add(reg, "regular module");
        for (std::size_t i = 1; i < quotients.size(); ++i) add(quotients[i], "quotient by a left ideal");
        for (std::size_t i = 0; i < quotients.size(); ++i) {
            for (std::size_t j = i; j < quotients.size(); ++j) {
                const auto size = static_cast<std::int64_t>(quotients[i].size()) * quotients[j].size();
                if (size > bounds.max_module_size) continue;
                add(make_direct_sum(quotients[i], quotients[j], limits), "direct sum of two quotients");
            }
        }
    }
    return out;
}

std::vector<CatalogEntry> full_catalog(const CatalogBounds& bounds)
{
    auto out = build_pinned_catalog();
    for (auto& e : generate_small_instances(bounds)) {
        if (!already_present(out, e.module)) out.push_back(std::move(e));
    }
    return out;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name)
{
    for (const auto& e : catalog) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

}  // namespace cprime
