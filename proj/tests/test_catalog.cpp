#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cprime/catalog.hpp"
#include "cprime/errors.hpp"
#include "cprime/instances.hpp"
#include "cprime/json_io.hpp"
#include "cprime/verify.hpp"
#include "samples.hpp"

using namespace cprime;
using samples::z;

namespace {

std::vector<std::string> names_of(const std::vector<CatalogEntry>& entries)
{
    std::vector<std::string> out;
    for (const auto& e : entries) out.push_back(e.name);
    return out;
}

bool contains(const std::vector<std::string>& xs, const std::string& x)
{
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

RingResolver builtin_resolver()
{
    return [](const std::string& name) { return builtin_ring(name); };
}

Json z4_ring_doc() { return ring_to_json(*z(4)); }

}  // namespace

TEST(BuiltinRing, ParsesNames)
{
    EXPECT_EQ(builtin_ring("Z4").value()->size(), 4);
    EXPECT_EQ(builtin_ring("M2(Z2)").value()->size(), 16);
    EXPECT_EQ(builtin_ring("Z2xZ2").value()->size(), 4);
    EXPECT_EQ(builtin_ring("Z2xZ3").value()->size(), 6);
    EXPECT_FALSE(builtin_ring("Q8").has_value());
    EXPECT_FALSE(builtin_ring("Z").has_value());
    EXPECT_THROW((void)builtin_ring("Z40", Limits{16, 64}), CapacityError);
}

// x -> (x mod 2, x mod 3) carries Z6 onto Z2xZ3.
TEST(BuiltinRing, Z6IsZ2TimesZ3)
{
    auto z6 = z(6);
    auto p = builtin_ring("Z2xZ3").value();
    auto phi = [&](Index x) -> Index {
        Index out = -1;
        for (Index y = 0; y < p->size(); ++y) {
            // the product ring lists pairs a-major
            if (y / 3 == x % 2 && y % 3 == x % 3) out = y;
        }
        return out;
    };
    std::set<Index> image;
    for (Index x = 0; x < 6; ++x) image.insert(phi(x));
    ASSERT_EQ(image.size(), 6u);
    EXPECT_EQ(phi(z6->one()), p->one());
    for (Index a = 0; a < 6; ++a) {
        for (Index b = 0; b < 6; ++b) {
            EXPECT_EQ(phi(z6->add(a, b)), p->add(phi(a), phi(b)));
            EXPECT_EQ(phi(z6->mul(a, b)), p->mul(phi(a), phi(b)));
        }
    }
    EXPECT_EQ(report_to_json(classify(make_regular_module(z6)))["verdicts"],
              report_to_json(classify(make_regular_module(p)))["verdicts"]);
}

TEST(Catalog, GeneratedExamples)
{
    const auto gen = names_of(generate_small_instances(CatalogBounds{4, 16}));
    EXPECT_TRUE(contains(gen, "Z4"));
    EXPECT_TRUE(contains(gen, "Z4/{0,2}"));
    EXPECT_TRUE(contains(gen, "Z4/{0,1,2,3}"));
    EXPECT_TRUE(contains(gen, "Z2"));
    EXPECT_TRUE(contains(gen, "Z2/{0,1}"));
    EXPECT_TRUE(contains(gen, "Z2+Z2"));
    // Z4/{0} has the same tables as Z4 and is dropped.
    EXPECT_FALSE(contains(gen, "Z4/{0}"));
    EXPECT_FALSE(contains(gen, "Z2/{0}"));
}

TEST(Catalog, GeneratedEntriesAreDistinctModules)
{
    const auto gen = generate_small_instances();
    for (std::size_t i = 0; i < gen.size(); ++i) {
        EXPECT_TRUE(gen[i].module.is_module()) << gen[i].name;
        EXPECT_LE(gen[i].module.size(), 64) << gen[i].name;
        for (std::size_t j = 0; j < i; ++j) {
            EXPECT_FALSE(gen[i].module.same_tables(gen[j].module)) << gen[i].name << " duplicates " << gen[j].name;
        }
    }
}

TEST(Catalog, BoundsAreRespected)
{
    for (const auto& e : generate_small_instances(CatalogBounds{4, 8})) {
        EXPECT_LE(e.module.ring().size(), 4) << e.name;
        EXPECT_LE(e.module.size(), 8) << e.name;
    }
}

TEST(Catalog, PinnedVerdictsMatch)
{
    for (const auto& e : build_pinned_catalog()) {
        ASSERT_FALSE(e.expected.empty()) << e.name;
        const auto rep = classify(e.module);
        for (const auto& [prop, want] : e.expected) EXPECT_EQ(rep.at(prop).holds, want) << e.name << " " << prop;
    }
}

TEST(Catalog, NonModuleEntryIsFlagged)
{
    const auto pinned = build_pinned_catalog();
    const auto* e = find_entry(pinned, "Z4@Z2");
    ASSERT_NE(e, nullptr);
    EXPECT_FALSE(e->genuine_module);
    EXPECT_FALSE(e->module.is_module());
    EXPECT_FALSE(e->notes.empty());
    for (const auto& other : pinned) {
        if (other.name != "Z4@Z2") EXPECT_TRUE(other.genuine_module) << other.name;
    }
}

TEST(Catalog, FullCatalogHasNoDuplicateNames)
{
    const auto names = names_of(full_catalog());
    EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
    EXPECT_EQ(find_entry(full_catalog(), "no such entry"), nullptr);
}

TEST(Json, RingRoundTrip)
{
    for (const auto& r : catalog_rings()) {
        auto back = ring_from_json(Json::parse(ring_to_json(*r).dump()));
        EXPECT_EQ(back->name(), r->name());
        EXPECT_EQ(back->add_table(), r->add_table());
        EXPECT_EQ(back->mul_table(), r->mul_table());
    }
}

TEST(Json, EveryCatalogEntryRoundTrips)
{
    for (const auto& e : full_catalog()) {
        if (!e.genuine_module) continue;
        for (bool inline_ring : {true, false}) {
            auto doc = Json::parse(module_to_json(e.module, inline_ring).dump());
            auto back = module_from_json(doc, builtin_resolver()).module;
            EXPECT_EQ(back.add_table(), e.module.add_table()) << e.name;
            EXPECT_EQ(back.act_table(), e.module.act_table()) << e.name;
            EXPECT_EQ(report_to_json(classify(back)), report_to_json(classify(e.module))) << e.name;
        }
    }
}

TEST(Json, NonModuleTablesAreRejectedOnLoad)
{
    auto doc = module_to_json(make_z4_with_z2_action(z(2)), true);
    try {
        (void)module_from_json(doc, builtin_resolver());
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_FALSE(e.witness().ring_elems.empty());
    }
}

TEST(Json, ExpectedVerdictsAreRead)
{
    auto doc = module_to_json(make_regular_module(z(4)), false);
    doc["expected"] = {{"prime", false}};
    EXPECT_EQ(module_from_json(doc, builtin_resolver()).expected.at("prime"), false);
    doc["expected"] = {{"prime", "no"}};
    EXPECT_THROW((void)module_from_json(doc, builtin_resolver()), StructuralError);
}

TEST(Json, StructuralErrors)
{
    auto ragged = z4_ring_doc();
    ragged["add"][1].erase(2);
    EXPECT_THROW((void)ring_from_json(ragged), StructuralError);

    auto out_of_range = z4_ring_doc();
    out_of_range["mul"][0][0] = 4;
    EXPECT_THROW((void)ring_from_json(out_of_range), StructuralError);

    auto negative = z4_ring_doc();
    negative["add"][0][0] = -1;
    EXPECT_THROW((void)ring_from_json(negative), StructuralError);

    auto missing = z4_ring_doc();
    missing.erase("one");
    EXPECT_THROW((void)ring_from_json(missing), StructuralError);

    EXPECT_THROW((void)ring_from_json(Json::array()), StructuralError);

    auto m = module_to_json(make_regular_module(z(4)), false);
    m["ring"] = "Q8";
    EXPECT_THROW((void)module_from_json(m, builtin_resolver()), StructuralError);

    auto short_act = module_to_json(make_regular_module(z(4)), false);
    short_act["act"].erase(3);
    EXPECT_THROW((void)module_from_json(short_act, builtin_resolver()), StructuralError);
}

TEST(Json, AxiomFailureIsValidationError)
{
    auto bad = z4_ring_doc();
    bad["mul"][2][3] = 1;
    EXPECT_THROW((void)ring_from_json(bad), ValidationError);
}

TEST(Json, SizeBoundIsCapacityError)
{
    auto doc = ring_to_json(*builtin_ring("M2(Z2)").value());
    EXPECT_THROW((void)ring_from_json(doc, Limits{8, 8}), CapacityError);
}

TEST(Json, ReportSchema)
{
    auto j = report_to_json(classify(make_column_module(samples::m2z2())));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["verdicts"].size(), classification_properties().size());
    EXPECT_TRUE(j["witnesses"].contains("completely_prime"));
    EXPECT_FALSE(j["witnesses"].contains("prime"));
    EXPECT_EQ(j["witnesses"]["completely_prime"]["module_elems"].size(), 1u);
}

TEST(Verify, CheckListParsing)
{
    EXPECT_EQ(parse_check_list("all"), available_checks());
    EXPECT_EQ(parse_check_list(""), available_checks());
    // run order follows the registry, not the command line
    EXPECT_EQ(parse_check_list("coprime_action,chain"), (std::vector<std::string>{"chain", "coprime_action"}));
    EXPECT_THROW((void)parse_check_list("chain,nope"), std::invalid_argument);
}

TEST(Verify, FalsifiedExpectedVerdictNamesTheEntry)
{
    auto e = *find_entry(build_pinned_catalog(), "M2(Z2).J");
    e.name = "falsified";
    e.expected["completely_prime"] = true;
    RunManifest manifest{{e}, {"expected"}, {}};
    const auto rep = run_verification(manifest);
    EXPECT_EQ(rep.exit_code(), 1);
    ASSERT_EQ(rep.count(CheckStatus::violation), 1u);
    const auto& bad = *std::find_if(rep.results.begin(), rep.results.end(),
                                    [](const CheckResult& r) { return r.status == CheckStatus::violation; });
    EXPECT_EQ(bad.subject, "falsified");
    EXPECT_NE(bad.detail.find("completely_prime"), std::string::npos);
}

TEST(Verify, PinnedCatalogPassesExpectedAndSoundChecks)
{
    RunManifest manifest{build_pinned_catalog(),
                         parse_check_list("expected,chain,chart,zero_divisors,equivalences,commutative,hirano"),
                         {}};
    const auto rep = run_verification(manifest);
    EXPECT_EQ(rep.count(CheckStatus::violation), 0u);
    EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Verify, NonModuleEntriesOnlyTakePartInExpected)
{
    const auto pinned = build_pinned_catalog();
    RunManifest manifest{{*find_entry(pinned, "Z4@Z2")}, {"expected", "chain", "coprime_action"}, {}};
    const auto rep = run_verification(manifest);
    for (const auto& r : rep.results) EXPECT_EQ(r.check, "expected");
    EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Verify, ReportsAreDeterministic)
{
    RunManifest manifest{full_catalog(CatalogBounds{9, 16}), {}, Limits{16, 64}};
    const auto a = verification_report_to_json(run_verification(manifest)).dump();
    const auto b = verification_report_to_json(run_verification(manifest)).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(Json::parse(a)["schema"], 1);
}
