// One PASS/FAIL line per acceptance criterion.  Exit status is 0 only when
// every criterion passes.
//
// usage: acceptance [CPRIME_BINARY DATA_DIR]
// With the two arguments, criterion 14 also runs the command-line tool and
// checks its exit codes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "cprime/catalog.hpp"
#include "cprime/errors.hpp"
#include "cprime/instances.hpp"
#include "cprime/json_io.hpp"
#include "cprime/verify.hpp"

using namespace cprime;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_ms;
    std::function<Outcome()> run;
};

const CatalogBounds kBounds{16, 64};

const std::vector<CatalogEntry>& catalog()
{
    static const auto c = full_catalog(kBounds);
    return c;
}

/// Runs `checks` over the full catalog and keeps results whose subject
/// contains `subject_filter`.
Outcome sweep(const std::vector<std::string>& checks, const std::string& subject_filter = "")
{
    RunManifest manifest{catalog(), checks, Limits{kBounds.max_ring_size, kBounds.max_module_size}};
    const auto rep = run_verification(manifest);
    std::size_t counts[4] = {0, 0, 0, 0};
    std::string first;
    for (const auto& r : rep.results) {
        if (r.subject.find(subject_filter) == std::string::npos) continue;
        ++counts[static_cast<int>(r.status)];
        if (r.status == CheckStatus::violation && first.empty()) first = r.subject + ": " + r.detail;
    }
    std::ostringstream os;
    os << counts[0] << " pass, " << counts[1] << " vacuous, " << counts[2] << " violation, " << counts[3]
       << " skipped";
    if (!first.empty()) os << "; first: " << first;
    return {counts[2] == 0 && counts[0] > 0, os.str()};
}

Outcome both(Outcome a, const Outcome& b)
{
    a.pass = a.pass && b.pass;
    a.detail += " | " + b.detail;
    return a;
}

Outcome ac1()
{
    auto m2 = make_matrix_ring(make_zn(2), 2);
    const auto rep = classify(make_column_module(m2));
    const auto& cp = rep.at("completely_prime");
    const Index a = reduce_integer_matrix(*make_zn(2), 2, {3, 3, 2, 2});
    // element 1 is the all-ones matrix
    const bool witness_ok = cp.witness.ring_elems == std::vector<Index>{a} && cp.witness.module_elems == std::vector<Index>{1};
    const bool ok = rep.at("simple").holds && rep.at("prime").holds && !cp.holds && witness_ok;
    return {ok, "simple=" + std::to_string(rep.at("simple").holds) + " prime=" + std::to_string(rep.at("prime").holds) +
                    " completely_prime=" + std::to_string(cp.holds) + " witness " + describe(cp.witness) + " (" +
                    cp.note + "), a mod 2 = ring(" + std::to_string(a) + ")"};
}

Outcome ac2()
{
    const auto rep = classify(make_regular_module(make_matrix_ring(make_zn(2), 2)));
    const bool ok = rep.at("prime").holds && !rep.at("completely_prime").holds;
    return {ok, "prime=" + std::to_string(rep.at("prime").holds) +
                    " completely_prime=" + std::to_string(rep.at("completely_prime").holds) + " witness " +
                    describe(rep.at("completely_prime").witness)};
}

Outcome ac3()
{
    const auto m = make_z4_with_z2_action(make_zn(2));
    const auto& subs = enumerate_submodules(m);
    std::vector<Submodule> nonzero_proper;
    for (const auto& n : subs) {
        if (n.count() > 1 && !n.is_full()) nonzero_proper.push_back(n);
    }
    const bool one_sub = nonzero_proper.size() == 1 && nonzero_proper.front() == ElementSet(4, {0, 2});
    bool colons_zero = true;
    for (const auto& n : subs) {
        if (n.is_full()) continue;
        for (Index x = 0; x < m.size(); ++x) {
            if (!n.contains(x) && annihilator_of_element(m, n, x) != ElementSet(2, {0})) colons_zero = false;
        }
    }
    const bool ccop = classify(m).at("completely_coprime").holds;
    const auto defect = validate_module(m);
    return {one_sub && colons_zero && ccop,
            std::to_string(nonzero_proper.size()) + " nonzero proper submodule(s), (N:m)={0} off N: " +
                std::to_string(colons_zero) + ", completely_coprime=" + std::to_string(ccop) +
                "; note: these tables are not a Z2-module (" + defect.note + " at " + describe(defect.witness) + ")"};
}

Outcome ac10()
{
    auto out = sweep({"hirano"});
    const bool z2 = is_fully_completely_prime_ring(*make_zn(2)).holds;
    const bool z4 = is_fully_completely_prime_ring(*make_zn(4)).holds;
    const bool z6 = is_fully_completely_prime_ring(*make_zn(6)).holds;
    out.pass = out.pass && z2 && !z4 && !z6;
    out.detail += "; Z2=" + std::to_string(z2) + " Z4=" + std::to_string(z4) + " Z6=" + std::to_string(z6);
    return out;
}

/// Idempotence only over the class each radical is meant for: semisimple
/// modules for the completely prime radical, IFP modules for the faithful one.
std::string restricted_idempotence()
{
    std::size_t checked = 0, failed = 0;
    for (const auto& e : catalog()) {
        if (!e.genuine_module) continue;
        std::vector<RadicalKind> kinds;
        if (is_semisimple(e.module).holds) kinds.push_back(RadicalKind::completely_prime);
        if (is_ifp_module(e.module).holds) kinds.push_back(RadicalKind::faithful_completely_prime);
        for (auto k : kinds) {
            for (const auto& v : evaluate_radical_laws(e.module, k)) {
                if (v.property != std::string(to_string(k)) + ".idempotence") continue;
                ++checked;
                failed += v.holds ? 0 : 1;
            }
        }
    }
    return "info: idempotence restricted to semisimple/IFP classes: " + std::to_string(checked) + " checked, " +
           std::to_string(failed) + " failed";
}

int run_cli(const std::string& cmd)
{
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome ac14(int argc, char** argv)
{
    std::ostringstream os;
    bool ok = true;

    auto bad = ring_to_json(*make_zn(4));
    bad["mul"][2][3] = 1;
    try {
        (void)ring_from_json(bad);
        ok = false;
        os << "corrupted ring accepted";
    } catch (const ValidationError& e) {
        os << "corrupted ring: " << e.what();
    }

    auto falsified = *find_entry(build_pinned_catalog(), "M2(Z2).J");
    falsified.expected["completely_prime"] = true;
    const auto rep = run_verification(RunManifest{{falsified}, {"expected"}, {}});
    ok = ok && rep.exit_code() == 1 && rep.count(CheckStatus::violation) == 1;
    os << "; falsified verdict: exit " << rep.exit_code();

    const auto z4 = make_regular_module(make_zn(4));
    try {
        (void)is_completely_prime_submodule(z4, ElementSet(4, {0, 1}));
        ok = false;
        os << "; non-submodule accepted";
    } catch (const PreconditionError& e) {
        os << "; non-submodule: precondition error (" << e.what() << ")";
    }

    if (argc >= 3) {
        const std::string cli = std::string("'") + argv[1] + "'";
        const std::string data = argv[2];
        const int corrupted = run_cli(cli + " classify --ring '" + data + "/ring_corrupted.json'");
        const int wrong = run_cli(cli + " verify --checks expected --module '" + data + "/module_column_falsified.json'");
        ok = ok && corrupted == 2 && wrong == 1;
        os << "; cli exits " << corrupted << "/" << wrong;
    }
    return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {1, "column module over M2(Z2): simple, prime, not completely prime", 1000, ac1},
        {2, "regular M2(Z2): prime, not completely prime", 1000, ac2},
        {3, "Z4 with Z2 action: one nonzero proper submodule, completely co-prime", 1000, ac3},
        {4, "implication chain sweep", 60000, [] { return sweep({"chain"}); }},
        {5, "co-prime chart sweep", 60000, [] { return sweep({"chart"}); }},
        {6, "completely prime submodule = zero-divisor criterion", 60000, [] { return sweep({"zero_divisors"}); }},
        {7, "absorbing/annihilator formulations agree", 60000, [] { return sweep({"equivalences"}); }},
        {8, "prime = completely prime over commutative rings", 60000, [] { return sweep({"commutative"}); }},
        {9, "completely co-prime forces commuting, power-stable, absorbing action", 60000,
         [] { return sweep({"coprime_action"}); }},
        {10, "fully completely prime rings = chain rings with (a)=(a^2)", 60000, ac10},
        {11, "radical laws for all three radicals", 60000,
         [] {
             auto out = sweep({"radical_laws"});
             out.detail += "\n      " + restricted_idempotence();
             return out;
         }},
        {12, "completely prime radical hereditary on semisimple modules; torsion axioms", 60000,
         [] { return both(sweep({"hereditary"}, "[completely_prime]"), sweep({"torsion"}, "semisimple")); }},
        {13, "IFP: essential closure and hereditary faithful completely prime radical", 60000,
         [] { return both(sweep({"essential"}), sweep({"hereditary"}, "[faithful_completely_prime]")); }},
        {14, "negative paths: corrupted ring, falsified verdict, non-submodule", 60000,
         [&] { return ac14(argc, argv); }},
    };

    int passed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("unexpected exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = out.pass && ms < c.budget_ms;
        passed += pass ? 1 : 0;
        std::printf("AC%-2d %s  %s  (%.1f ms)\n      %s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), ms,
                    out.detail.c_str());
    }
    std::printf("%d/%zu criteria pass\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
