#include <gtest/gtest.h>

#include "cprime/classify.hpp"
#include "cprime/errors.hpp"
#include "samples.hpp"

using namespace cprime;
using samples::m2z2;
using samples::z;

namespace {

ElementSet set_of(Index universe, std::initializer_list<Index> xs) { return ElementSet(universe, xs); }

FiniteModule z4_z2() { return make_z4_with_z2_action(z(2)); }

bool kills(const FiniteModule& m, Index a)
{
    for (Index x = 0; x < m.size(); ++x) {
        if (m.act(a, x) != m.zero()) return false;
    }
    return true;
}

// Direct transcriptions of the definitions, kept apart from the library scans.
bool oracle_completely_prime(const FiniteModule& m)
{
    bool some_nonzero_action = false;
    for (Index a = 0; a < m.ring().size(); ++a) some_nonzero_action = some_nonzero_action || !kills(m, a);
    if (!some_nonzero_action) return false;
    for (Index a = 0; a < m.ring().size(); ++a) {
        for (Index x = 0; x < m.size(); ++x) {
            if (m.act(a, x) == m.zero() && x != m.zero() && !kills(m, a)) return false;
        }
    }
    return true;
}

bool oracle_prime(const FiniteModule& m)
{
    if (acts_trivially(m)) return false;
    for (Index a = 0; a < m.ring().size(); ++a) {
        for (Index x = 0; x < m.size(); ++x) {
            bool arx_zero = true;
            for (Index r = 0; r < m.ring().size(); ++r) arx_zero = arx_zero && m.act(a, m.act(r, x)) == m.zero();
            if (arx_zero && x != m.zero() && !kills(m, a)) return false;
        }
    }
    return true;
}

/// Every module in the samples plus each of its proper quotients.
std::vector<FiniteModule> modules_and_quotients()
{
    std::vector<FiniteModule> out;
    for (const auto& m : samples::small_modules()) {
        out.push_back(m);
        for (const auto& n : enumerate_submodules(m)) {
            if (n.count() > 1 && !n.is_full()) out.push_back(quotient(m, n).module);
        }
    }
    return out;
}

}  // namespace

// =============================================================================
// Worked instances
// =============================================================================

TEST(ColumnModule, SimplePrimeNotCompletelyPrime)
{
    auto m = make_column_module(m2z2());
    EXPECT_TRUE(is_simple(m).holds);
    EXPECT_TRUE(is_prime_module(m).holds);
    auto v = is_completely_prime_module(m);
    ASSERT_FALSE(v.holds);
    const Index a = reduce_integer_matrix(*z(2), 2, {3, 3, 2, 2});
    EXPECT_EQ(v.witness.ring_elems, (std::vector<Index>{a}));
    EXPECT_EQ(v.witness.module_elems, (std::vector<Index>{1}));
    EXPECT_EQ(column_module_matrices()[1], (std::vector<Index>{1, 1, 1, 1}));
    EXPECT_EQ(m.act(a, 1), m.zero());
    EXPECT_FALSE(kills(m, a));
}

TEST(MatrixRegular, PrimeNotCompletelyPrime)
{
    auto m = make_regular_module(m2z2());
    EXPECT_TRUE(is_prime_module(m).holds);
    EXPECT_FALSE(is_completely_prime_module(m).holds);
    auto ifp = is_ifp_module(m);
    ASSERT_FALSE(ifp.holds);
    const Index a = ifp.witness.ring_elems[0], r = ifp.witness.ring_elems[1], x = ifp.witness.module_elems[0];
    EXPECT_EQ(m.act(a, x), m.zero());
    EXPECT_NE(m.act(a, m.act(r, x)), m.zero());
}

TEST(Z4WithZ2Action, FullyCompletelyPrime)
{
    auto m = z4_z2();
    EXPECT_TRUE(is_completely_prime_module(m).holds);
    EXPECT_TRUE(is_completely_semiprime_module(m).holds);
    EXPECT_TRUE(is_coprime_module(m).holds);
    EXPECT_TRUE(is_completely_coprime_module(m).holds);
    EXPECT_TRUE(is_fully_completely_prime_module(m).holds);
    EXPECT_TRUE(is_fully_prime_module(m).holds);
    EXPECT_TRUE(is_completely_prime_submodule(m, set_of(4, {0, 2})).holds);
    for (Index x : {1, 3}) EXPECT_EQ(annihilator_of_element(m, set_of(4, {0, 2}), x), set_of(2, {0}));
}

TEST(Z4Regular, Failures)
{
    auto m = make_regular_module(z(4));
    auto csp = is_completely_semiprime_module(m);
    ASSERT_FALSE(csp.holds);
    EXPECT_EQ(csp.witness.ring_elems, (std::vector<Index>{2, 1}));
    EXPECT_EQ(csp.witness.module_elems, (std::vector<Index>{1}));

    auto cop = is_coprime_module(m);
    ASSERT_FALSE(cop.holds);
    EXPECT_EQ(cop.witness.sets[0], set_of(4, {0, 2}));

    auto ccop = is_completely_coprime_module(m);
    ASSERT_FALSE(ccop.holds);
    EXPECT_EQ(ccop.witness.sets[0], set_of(4, {0}));
    EXPECT_EQ(ccop.witness.module_elems, (std::vector<Index>{2}));
    EXPECT_EQ(ccop.witness.ring_elems, (std::vector<Index>{2}));

    auto sub = is_completely_prime_submodule(m, m.zero_submodule());
    ASSERT_FALSE(sub.holds);
    EXPECT_EQ(sub.witness.ring_elems, (std::vector<Index>{2}));
    EXPECT_EQ(sub.witness.module_elems, (std::vector<Index>{2}));
    EXPECT_FALSE(is_fully_prime_module(m).holds);
}

TEST(SubmodulePredicates, ColumnModuleZero)
{
    auto m = make_column_module(m2z2());
    EXPECT_TRUE(is_prime_submodule(m, m.zero_submodule()).holds);
    EXPECT_FALSE(is_completely_prime_submodule(m, m.zero_submodule()).holds);
}

TEST(SubmodulePredicates, RejectWholeAndNonSubmodules)
{
    auto m = make_regular_module(z(4));
    EXPECT_THROW(is_completely_prime_submodule(m, m.whole()), PreconditionError);
    EXPECT_THROW(is_prime_submodule(m, set_of(4, {0, 1})), PreconditionError);
    EXPECT_THROW(is_ifp_submodule(m, set_of(4, {0, 3})), PreconditionError);
}

TEST(SubmodulePredicates, WitnessesLiveInTheParent)
{
    auto m = make_regular_module(z(8));
    auto v = is_completely_prime_submodule(m, set_of(8, {0, 4}));
    ASSERT_FALSE(v.holds);
    const Index a = v.witness.ring_elems[0], x = v.witness.module_elems[0];
    EXPECT_FALSE(v.witness.sets[0].contains(x));
    EXPECT_TRUE(v.witness.sets[0].contains(m.act(a, x)));
}

TEST(ZeroModule, Conventions)
{
    auto m = make_zero_module(z(3));
    for (const auto& v : {is_prime_module(m), is_completely_prime_module(m), is_coprime_module(m),
                          is_completely_coprime_module(m), is_fully_prime_module(m),
                          is_fully_completely_prime_module(m)}) {
        EXPECT_FALSE(v.holds) << v.property;
        EXPECT_EQ(v.note, "RM = {0}");
    }
    EXPECT_TRUE(is_two_primal_module(m).holds);
    EXPECT_NO_THROW(check_implication_chain(m));
    EXPECT_NO_THROW(check_coprime_chart(m));
}

TEST(TwoPrimal, ColumnModuleRadicalsDiffer)
{
    auto m = make_column_module(m2z2());
    auto v = is_two_primal_module(m);
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(v.witness.sets[0], m.zero_submodule());
    EXPECT_EQ(v.witness.sets[1], m.whole());
}

TEST(Coprime, WholeModuleReading)
{
    auto m = z4_z2();
    EXPECT_TRUE(is_coprime_module(m).holds);
    auto v = is_coprime_with_whole(m);
    ASSERT_FALSE(v.holds);
    EXPECT_TRUE(v.witness.sets[0].is_full());
}

TEST(Report, PropertyOrderAndLookup)
{
    auto rep = classify(make_column_module(m2z2()));
    ASSERT_EQ(rep.verdicts.size(), classification_properties().size());
    for (std::size_t i = 0; i < rep.verdicts.size(); ++i) {
        EXPECT_EQ(rep.verdicts[i].property, classification_properties()[i]);
    }
    EXPECT_TRUE(rep.at("simple").holds);
    EXPECT_FALSE(rep.at("completely_prime").holds);
    EXPECT_THROW(static_cast<void>(rep.at("nonsense")), std::out_of_range);
    for (const auto& c : rep.cross_checks) EXPECT_TRUE(c.holds) << c.property;
}

// =============================================================================
// Agreement with definitions and between formulations
// =============================================================================

TEST(Oracles, CompletelyPrimeAndPrimeMatchDefinitions)
{
    for (const auto& m : modules_and_quotients()) {
        EXPECT_EQ(is_completely_prime_module(m).holds, oracle_completely_prime(m)) << m.name();
        EXPECT_EQ(is_prime_module(m).holds, oracle_prime(m)) << m.name();
    }
}

TEST(Oracles, FailedVerdictsReplay)
{
    for (const auto& m : modules_and_quotients()) {
        auto cp = is_completely_prime_module(m);
        if (!cp.holds && cp.note.empty()) {
            const Index a = cp.witness.ring_elems[0], x = cp.witness.module_elems[0];
            EXPECT_EQ(m.act(a, x), m.zero());
            EXPECT_NE(x, m.zero());
            EXPECT_FALSE(kills(m, a));
        }
        auto sym = is_symmetric_module(m);
        if (!sym.holds) {
            const Index a = sym.witness.ring_elems[0], b = sym.witness.ring_elems[1], x = sym.witness.module_elems[0];
            EXPECT_EQ(m.act(a, m.act(b, x)), m.zero());
            EXPECT_NE(m.act(b, m.act(a, x)), m.zero());
        }
        auto ccop = is_completely_coprime_module(m);
        if (!ccop.holds && ccop.note.empty()) {
            const auto& n = ccop.witness.sets[0];
            const Index a = ccop.witness.ring_elems[0], x = ccop.witness.module_elems[0];
            EXPECT_FALSE(n.contains(x));
            EXPECT_NE(annihilator_of_element(m, n, x).contains(a), annihilator(m).contains(a));
        }
    }
}

TEST(Checks, ChainChartAndEquivalencesHoldOnSamples)
{
    for (const auto& m : modules_and_quotients()) {
        EXPECT_NO_THROW(check_implication_chain(m)) << m.name();
        EXPECT_NO_THROW(check_coprime_chart(m)) << m.name();
        EXPECT_NO_THROW(check_zero_divisor_criterion(m)) << m.name();
        EXPECT_NO_THROW(check_equivalences(m)) << m.name();
        if (is_commutative(m.ring())) EXPECT_NO_THROW(check_commutative_collapse(m)) << m.name();
        if (is_torsion_free(m)) EXPECT_NO_THROW(check_torsion_free_criterion(m)) << m.name();
        if (is_uniform(m) && !acts_trivially(m)) EXPECT_NO_THROW(check_uniform_criterion(m)) << m.name();
        if (is_left_duo(m.ring()) && is_fully_prime_module(m)) EXPECT_NO_THROW(check_left_duo_lift(m)) << m.name();
    }
}

TEST(Checks, CommutativeCollapseNeedsCommutativeRing)
{
    EXPECT_THROW(check_commutative_collapse(make_column_module(m2z2())), PreconditionError);
}

TEST(Checks, CyclicOverFullyCompletelyPrimeRing)
{
    auto v = check_cyclic_over_fcp_ring(make_regular_module(z(2)));
    EXPECT_TRUE(v.back().holds);
    EXPECT_THROW(check_cyclic_over_fcp_ring(make_regular_module(z(4))), PreconditionError);
    EXPECT_THROW(check_cyclic_over_fcp_ring(make_direct_sum(make_regular_module(z(2)), make_regular_module(z(2)))),
                 PreconditionError);
}

// =============================================================================
// Statements that hold on some instances and are refuted on others
// =============================================================================

TEST(CoprimeAction, HoldsOnZ4WithZ2Action)
{
    auto v = check_coprime_action(z4_z2());
    EXPECT_EQ(v.size(), 3U);
}

TEST(CoprimeAction, HypothesisFailureIsAPreconditionError)
{
    EXPECT_THROW(check_coprime_action(make_regular_module(z(4))), PreconditionError);
}

TEST(CoprimeAction, RefutedByZ3Regular)
{
    auto m = make_regular_module(z(3));
    ASSERT_TRUE(is_completely_coprime_module(m).holds);
    try {
        check_coprime_action(m);
        FAIL() << "expected a violation";
    } catch (const TheoremViolation& e) {
        EXPECT_EQ(e.check(), "coprime_action");
        EXPECT_EQ(e.witness().ring_elems, (std::vector<Index>{2}));
        EXPECT_EQ(e.witness().module_elems, (std::vector<Index>{1}));
        // 2*1 = 2 but 2*(2*1) = 1.
        EXPECT_NE(m.act(2, 1), m.act(2, m.act(2, 1)));
    }
}

TEST(CoprimeRing, HoldsOverZ2)
{
    EXPECT_NO_THROW(check_coprime_ring(z4_z2()));
    EXPECT_NO_THROW(check_coprime_ring(make_regular_module(z(2))));
    EXPECT_THROW(check_coprime_ring(make_reduction_module(z(4), 2)), PreconditionError);
}

TEST(CoprimeRing, RefutedByZ3Regular)
{
    EXPECT_THROW(check_coprime_ring(make_regular_module(z(3))), TheoremViolation);
}

TEST(EndomorphismCriterion, HypothesisFalseOnZ4WithZ2Action)
{
    auto v = check_endomorphism_criterion(z4_z2());
    EXPECT_FALSE(v[0].holds);  // x -> 2x is nonzero and not injective
}

TEST(EndomorphismCriterion, RefutedByColumnModule)
{
    try {
        check_endomorphism_criterion(make_column_module(m2z2()));
        FAIL() << "expected a violation";
    } catch (const TheoremViolation& e) {
        EXPECT_EQ(e.check(), "endomorphism_criterion");
    }
    EXPECT_THROW(check_endomorphism_criterion(make_zero_module(z(2))), PreconditionError);
}

TEST(AnnihilatorCriterion, RefutedByColumnModule)
{
    EXPECT_THROW(check_annihilator_criterion(make_column_module(m2z2())), TheoremViolation);
    EXPECT_NO_THROW(check_annihilator_criterion(make_regular_module(z(2))));
    EXPECT_THROW(check_annihilator_criterion(make_regular_module(z(4))), PreconditionError);
}

TEST(Hirano, PinnedRings)
{
    EXPECT_TRUE(check_hirano(*z(2))[0].holds);
    EXPECT_FALSE(check_hirano(*z(4))[0].holds);
    EXPECT_FALSE(check_hirano(*z(6))[0].holds);
    for (Index n : {3, 8, 9}) EXPECT_NO_THROW(check_hirano(*z(n)));
    EXPECT_NO_THROW(check_hirano(*m2z2()));
    EXPECT_NO_THROW(check_hirano(*make_product_ring(z(2), z(2))));
}

TEST(FreeModules, OverDomains)
{
    for (Index p : {2, 3, 5}) {
        for (int k : {1, 2}) EXPECT_NO_THROW(check_free_module(z(p), k));
    }
    EXPECT_THROW(check_free_module(z(4), 1), PreconditionError);
    EXPECT_THROW(check_free_module(z(2), 3), std::invalid_argument);
}
