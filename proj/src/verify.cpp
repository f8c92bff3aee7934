#include "cprime/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cprime/errors.hpp"

namespace cprime {

namespace {

using ModuleCheck = std::vector<Verdict> (*)(const FiniteModule&, const Limits&);

struct ModuleCheckEntry {
    const char* name;
    ModuleCheck fn;
};

template <std::vector<Verdict> (*F)(const FiniteModule&)>
std::vector<Verdict> unbounded(const FiniteModule& m, const Limits&)
{
    return F(m);
}

// Checks that take a module and nothing else, in run order.
const ModuleCheckEntry kModuleChecks[] = {
    {"chain", unbounded<check_implication_chain>},
    {"chart", unbounded<check_coprime_chart>},
    {"zero_divisors", unbounded<check_zero_divisor_criterion>},
    {"equivalences", unbounded<check_equivalences>},
    {"commutative", unbounded<check_commutative_collapse>},
    {"torsion_free", unbounded<check_torsion_free_criterion>},
    {"uniform", unbounded<check_uniform_criterion>},
    {"left_duo", unbounded<check_left_duo_lift>},
    {"cyclic", unbounded<check_cyclic_over_fcp_ring>},
    {"annihilator", unbounded<check_annihilator_criterion>},
    {"endomorphism", check_endomorphism_criterion},
    {"coprime_action", unbounded<check_coprime_action>},
    {"coprime_ring", unbounded<check_coprime_ring>},
};

/// Runs `body`, turning the exception taxonomy into a status.
template <typename F>
CheckResult guarded(const std::string& check, const std::string& subject, F body)
{
    CheckResult r{check, subject, CheckStatus::pass, {}, {}};
    try {
        body(r);
    } catch (const TheoremViolation& e) {
        r.status = CheckStatus::violation;
        r.detail = e.what();
        r.witness = e.witness();
    } catch (const PreconditionError& e) {
        r.status = CheckStatus::vacuous;
        r.detail = e.what();
    } catch (const CapacityError& e) {
        r.status = CheckStatus::skipped;
        r.detail = e.what();
    }
    return r;
}

bool selected(const std::vector<std::string>& checks, const std::string& name)
{
    return std::find(checks.begin(), checks.end(), name) != checks.end();
}

std::vector<RingPtr> distinct_rings(const std::vector<const CatalogEntry*>& entries)
{
    std::vector<RingPtr> out;
    for (const auto* e : entries) {
        const auto& r = e->module.ring_ptr();
        const bool seen = std::any_of(out.begin(), out.end(), [&](const RingPtr& s) { return s->same_structure(*r); });
        if (!seen) out.push_back(r);
    }
    return out;
}

void expected_check(const CatalogEntry& e, CheckResult& r)
{
    const auto rep = classify(e.module);
    for (const auto& [prop, want] : e.expected) {
        bool got = false;
        try {
            got = rep.at(prop).holds;
        } catch (const std::out_of_range&) {
            throw TheoremViolation("expected", "entry " + e.name + ": unknown property " + prop);
        }
        if (got != want) {
            throw TheoremViolation("expected",
                                   "entry " + e.name + ": " + prop + " expected " + (want ? "true" : "false") +
                                       " but computed " + (got ? "true" : "false"),
                                   rep.at(prop).witness);
        }
    }
    r.detail = std::to_string(e.expected.size()) + " pinned verdict(s) match";
}

void radical_law_check(const FiniteModule& m, RadicalKind kind, CheckResult& r)
{
    std::string failed;
    Witness w;
    for (const auto& v : evaluate_radical_laws(m, kind)) {
        if (v.holds) continue;
        if (failed.empty()) w = v.witness;
        failed += (failed.empty() ? "" : ", ") + v.property;
    }
    if (!failed.empty()) throw TheoremViolation("radical_laws", m.name() + ": " + failed + " fails", w);
    r.detail = "quotient vanishing, submodule bound and idempotence hold";
}

void essential_check(const FiniteModule& m, CheckResult& r)
{
    if (!is_ifp_module(m)) throw PreconditionError(m.name() + " is not IFP");
    std::size_t asserted = 0;
    for (const auto& n : enumerate_submodules(m)) {
        if (n.count() == 1 || !is_essential(m, n)) continue;
        if (check_essential_closure(m, n).size() > 1) ++asserted;
    }
    if (asserted == 0) throw PreconditionError("no essential submodule of " + m.name() + " is faithful completely prime");
    r.detail = std::to_string(asserted) + " essential submodule(s) checked";
}

void torsion_check(const std::vector<FiniteModule>& universe, RadicalKind kind, const Limits& limits, CheckResult& r)
{
    if (universe.empty()) throw PreconditionError("empty universe");
    const auto rep = torsion_theory_over_universe(universe, kind, limits);
    for (const auto& v : rep.axioms) {
        if (!v.holds) throw TheoremViolation("torsion", v.property + " fails: " + v.note);
    }
    r.detail = std::to_string(universe.size()) + " modules, |T|=" + std::to_string(rep.torsion_class.size()) +
               ", |F|=" + std::to_string(rep.torsionfree_class.size()) + " (universe-relative)";
}

}  // namespace

std::string_view to_string(CheckStatus s) noexcept
{
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::vacuous: return "vacuous";
        case CheckStatus::violation: return "violation";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

std::size_t VerificationReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status == s; }));
}

std::size_t VerificationReport::count(const std::string& check, CheckStatus s) const
{
    return static_cast<std::size_t>(std::count_if(
        results.begin(), results.end(), [&](const CheckResult& r) { return r.check == check && r.status == s; }));
}

int VerificationReport::exit_code() const { return count(CheckStatus::violation) == 0 ? 0 : 1; }

const std::vector<std::string>& available_checks()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"expected"};
        for (const auto& c : kModuleChecks) v.emplace_back(c.name);
        v.insert(v.end(), {"radical_laws", "hereditary", "essential", "hirano", "free", "torsion"});
        return v;
    }();
    return names;
}

std::vector<std::string> parse_check_list(const std::string& csv)
{
    if (csv.empty() || csv == "all") return available_checks();
    std::vector<std::string> wanted;
    std::stringstream in(csv);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty()) continue;
        if (!selected(available_checks(), item)) throw std::invalid_argument("unknown check: " + item);
        if (!selected(wanted, item)) wanted.push_back(item);
    }
    // Keep run order independent of how the list was written.
    std::vector<std::string> out;
    for (const auto& c : available_checks()) {
        if (selected(wanted, c)) out.push_back(c);
    }
    return out;
}

VerificationReport run_verification(const RunManifest& manifest)
{
    VerificationReport rep;
    rep.checks = manifest.checks.empty() ? available_checks() : manifest.checks;
    for (const auto& c : rep.checks) {
        if (!selected(available_checks(), c)) throw std::invalid_argument("unknown check: " + c);
    }
    std::vector<const CatalogEntry*> genuine;
    for (const auto& e : manifest.entries) {
        rep.entries.push_back(e.name);
        if (e.genuine_module) genuine.push_back(&e);
    }
    const auto& checks = rep.checks;
    auto& out = rep.results;

    if (selected(checks, "expected")) {
        for (const auto& e : manifest.entries) {
            if (e.expected.empty()) continue;
            out.push_back(guarded("expected", e.name, [&](CheckResult& r) { expected_check(e, r); }));
        }
    }
    for (const auto& mc : kModuleChecks) {
        if (!selected(checks, mc.name)) continue;
        for (const auto* e : genuine) {
            out.push_back(guarded(mc.name, e->name, [&](CheckResult&) { mc.fn(e->module, manifest.limits); }));
        }
    }
    constexpr RadicalKind kinds[] = {RadicalKind::prime, RadicalKind::completely_prime,
                                     RadicalKind::faithful_completely_prime};
    if (selected(checks, "radical_laws")) {
        for (const auto* e : genuine) {
            for (auto k : kinds) {
                out.push_back(guarded("radical_laws", e->name + " [" + std::string(to_string(k)) + "]",
                                      [&](CheckResult& r) { radical_law_check(e->module, k, r); }));
            }
        }
    }
    if (selected(checks, "hereditary")) {
        for (const auto* e : genuine) {
            out.push_back(guarded("hereditary", e->name + " [completely_prime]", [&](CheckResult&) {
                check_hereditary(e->module, RadicalKind::completely_prime, ModuleClass::semisimple);
            }));
            out.push_back(guarded("hereditary", e->name + " [faithful_completely_prime]", [&](CheckResult&) {
                check_hereditary(e->module, RadicalKind::faithful_completely_prime, ModuleClass::ifp);
            }));
        }
    }
    if (selected(checks, "essential")) {
        for (const auto* e : genuine) {
            out.push_back(guarded("essential", e->name, [&](CheckResult& r) { essential_check(e->module, r); }));
        }
    }
    const auto rings = distinct_rings(genuine);
    if (selected(checks, "hirano")) {
        for (const auto& r : rings) out.push_back(guarded("hirano", r->name(), [&](CheckResult&) { check_hirano(*r); }));
    }
    if (selected(checks, "free")) {
        for (const auto& r : rings) {
            for (int k : {1, 2}) {
                out.push_back(guarded("free", r->name() + "^" + std::to_string(k),
                                      [&](CheckResult&) { check_free_module(r, k); }));
            }
        }
    }
    if (selected(checks, "torsion")) {
        for (const auto& r : rings) {
            std::vector<FiniteModule> semisimple, ifp;
            for (const auto* e : genuine) {
                if (!e->module.ring().same_structure(*r)) continue;
                if (is_semisimple(e->module)) semisimple.push_back(e->module);
                if (is_ifp_module(e->module)) ifp.push_back(e->module);
            }
            out.push_back(guarded("torsion", r->name() + " semisimple [completely_prime]", [&](CheckResult& res) {
                torsion_check(semisimple, RadicalKind::completely_prime, manifest.limits, res);
            }));
            out.push_back(guarded("torsion", r->name() + " ifp [faithful_completely_prime]", [&](CheckResult& res) {
                torsion_check(ifp, RadicalKind::faithful_completely_prime, manifest.limits, res);
            }));
        }
    }
    return rep;
}

Json verification_report_to_json(const VerificationReport& rep)
{
    Json results = Json::array();
    for (const auto& r : rep.results) {
        Json j{{"check", r.check}, {"subject", r.subject}, {"status", std::string(to_string(r.status))}};
        if (!r.detail.empty()) j["detail"] = r.detail;
        if (!r.witness.empty()) j["witness"] = witness_to_json(Verdict{r.check, false, r.witness, {}});
        results.push_back(std::move(j));
    }
    Json summary = Json::object();
    for (const auto& c : rep.checks) {
        Json counts = Json::object();
        for (auto s : {CheckStatus::pass, CheckStatus::vacuous, CheckStatus::violation, CheckStatus::skipped}) {
            counts[std::string(to_string(s))] = rep.count(c, s);
        }
        summary[c] = counts;
    }
    return Json{{"schema", 1},     {"entries", rep.entries}, {"checks", rep.checks},
                {"summary", summary}, {"results", results},  {"exit_code", rep.exit_code()}};
}

std::string format_verification_text(const VerificationReport& rep)
{
    std::ostringstream out;
    out << rep.entries.size() << " entries\n";
    out << std::left << std::setw(16) << "check" << std::right << std::setw(6) << "pass" << std::setw(9) << "vacuous"
        << std::setw(11) << "violation" << std::setw(9) << "skipped" << '\n';
    for (const auto& c : rep.checks) {
        out << std::left << std::setw(16) << c << std::right << std::setw(6) << rep.count(c, CheckStatus::pass)
            << std::setw(9) << rep.count(c, CheckStatus::vacuous) << std::setw(11)
            << rep.count(c, CheckStatus::violation) << std::setw(9) << rep.count(c, CheckStatus::skipped) << '\n';
    }
    for (const auto& r : rep.results) {
        if (r.status != CheckStatus::violation) continue;
        out << "VIOLATION " << r.check << " " << r.subject << ": " << r.detail;
        if (!r.witness.empty()) out << " [" << describe(r.witness) << "]";
        out << '\n';
    }
    out << (rep.exit_code() == 0 ? "OK" : "FAILED") << ": " << rep.count(CheckStatus::violation) << " violation(s)\n";
    return out.str();
}

}  // namespace cprime
