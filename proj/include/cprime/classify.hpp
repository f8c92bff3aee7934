#pragma once

#include <string>
#include <vector>

#include "cprime/module.hpp"

namespace cprime {

// Module-level predicates.  The primeness notions (prime, completely prime,
// co-prime, completely co-prime, fully prime, fully completely prime) are
// false on a module with RM = {0}; the verdict note then reads "RM = {0}".
// Witnesses are the least failing tuple, module element first.

/// am = 0 implies m = 0 or aM = 0.  Witness ring {a}, module {x}.
Verdict is_completely_prime_module(const FiniteModule& m);
/// (0:x) = (0:M) for every nonzero x.  Witness ring {a} in (0:x) \ (0:M), module {x}.
Verdict completely_prime_by_annihilators(const FiniteModule& m);

/// aRx = 0 implies x = 0 or aM = 0.  Witness ring {a}, module {x}.
Verdict is_prime_module(const FiniteModule& m);
/// (0:N) = (0:M) for every nonzero submodule N.  Witness sets {N}, ring {a}.
Verdict prime_by_submodule_annihilators(const FiniteModule& m);

/// a(ax) = 0 implies aRx = 0.  Witness ring {a, r} with a r x != 0, module {x}.
Verdict is_completely_semiprime_module(const FiniteModule& m);
/// abx = 0 implies bax = 0.  Witness ring {a, b}, module {x}.
Verdict is_symmetric_module(const FiniteModule& m);
/// ax = 0 implies arx = 0.  Witness ring {a, r}, module {x}.
Verdict is_ifp_module(const FiniteModule& m);
/// Prime radical equals completely prime radical.  Witness sets {beta, beta_co}.
Verdict is_two_primal_module(const FiniteModule& m);

/// (N:M) = (0:M) for every nonzero proper submodule N.  Witness sets {N}.
Verdict is_coprime_module(const FiniteModule& m);
/// The same with N = M admitted.
Verdict is_coprime_with_whole(const FiniteModule& m);
/// (N:x) = (0:M) for every proper N and x outside N.  Witness sets {N}, module {x}, ring {a}.
Verdict is_completely_coprime_module(const FiniteModule& m);
/// Every proper submodule is completely prime.  Witness sets {N} plus the
/// failing pair mapped back to representatives in M.
Verdict is_fully_completely_prime_module(const FiniteModule& m);
/// Every proper submodule is prime.
Verdict is_fully_prime_module(const FiniteModule& m);
/// am in N with x outside N forces aM = 0, for every proper N.
Verdict absorbing_annihilators(const FiniteModule& m);
/// (0:M) = Zd(M/N) for every proper N.  Witness sets {N}.
Verdict constant_zero_divisors(const FiniteModule& m);

// Submodule-level predicates: the module-level predicate on M/N, with the
// witness module element replaced by a representative in M.  PreconditionError
// when n is not a proper submodule.

/// Also computes (N:M) = Zd(M/N) and throws TheoremViolation if the two disagree.
Verdict is_completely_prime_submodule(const FiniteModule& m, const Submodule& n);
Verdict is_prime_submodule(const FiniteModule& m, const Submodule& n);
Verdict is_completely_semiprime_submodule(const FiniteModule& m, const Submodule& n);
Verdict is_symmetric_submodule(const FiniteModule& m, const Submodule& n);
Verdict is_ifp_submodule(const FiniteModule& m, const Submodule& n);

/// Every verdict of one module in a fixed property order.
struct ClassificationReport {
    std::string module;
    std::vector<Verdict> verdicts;
    /// Independent formulations compared against each other (all should hold).
    std::vector<Verdict> cross_checks;

    /// Throws std::out_of_range for an unknown property.
    [[nodiscard]] const Verdict& at(const std::string& property) const;
};

/// Properties in report order.
const std::vector<std::string>& classification_properties();

ClassificationReport classify(const FiniteModule& m);

// Checks of stated implications on one instance.  Each returns the verdicts
// it looked at, throws PreconditionError when the hypothesis fails and
// TheoremViolation when the hypothesis holds but the conclusion does not.

/// completely prime => completely semiprime => symmetric => IFP => 2-primal.
std::vector<Verdict> check_implication_chain(const FiniteModule& m);
/// completely co-prime => completely prime => prime; completely co-prime => co-prime.
std::vector<Verdict> check_coprime_chart(const FiniteModule& m);
/// Completely prime submodule iff (N:M) = Zd(M/N), over every proper N.
std::vector<Verdict> check_zero_divisor_criterion(const FiniteModule& m);
/// Definition, all-submodules-completely-prime, absorbing annihilators and
/// constant zero-divisor sets agree; also the two completely prime formulations
/// and the two prime formulations.
std::vector<Verdict> check_equivalences(const FiniteModule& m);
/// Over a commutative ring, prime = completely prime.
std::vector<Verdict> check_commutative_collapse(const FiniteModule& m);
/// For completely co-prime M: abx = bax, ax = a^k x (k up to exponent + 1),
/// and ax = abx or bx = abx.
std::vector<Verdict> check_coprime_action(const FiniteModule& m);
/// For torsion-free completely co-prime M: R has a = a^2, is commutative,
/// fully completely prime and satisfies a = ab or b = ab.
std::vector<Verdict> check_coprime_ring(const FiniteModule& m);
/// Nonzero endomorphisms injective => completely prime; retractable with
/// End(M) a domain => completely prime.
std::vector<Verdict> check_endomorphism_criterion(const FiniteModule& m, const Limits& limits = {});
/// Torsion-free => completely prime and faithful.
std::vector<Verdict> check_torsion_free_criterion(const FiniteModule& m);
/// For uniform M: completely prime iff every nonzero cyclic submodule is.
std::vector<Verdict> check_uniform_criterion(const FiniteModule& m);
/// Fully prime over a left-duo ring => fully completely prime.
std::vector<Verdict> check_left_duo_lift(const FiniteModule& m);
/// (0:x) maximal left ideal for all x != 0, or (N:x) minimal left ideal for
/// all N and x outside N => completely co-prime.
std::vector<Verdict> check_annihilator_criterion(const FiniteModule& m);
/// Cyclic M over a fully completely prime ring => fully completely prime.
std::vector<Verdict> check_cyclic_over_fcp_ring(const FiniteModule& m);

/// Ring-level: fully completely prime iff chain ring with (a) = (a^2) for all a.
std::vector<Verdict> check_hirano(const FiniteRing& r);
/// Free module R^k over a domain R is completely prime.
std::vector<Verdict> check_free_module(const RingPtr& r, int k);

}  // namespace cprime
