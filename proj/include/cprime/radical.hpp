#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cprime/module.hpp"

namespace cprime {

enum class RadicalKind { prime, completely_prime, faithful_completely_prime };

std::string_view to_string(RadicalKind kind) noexcept;
/// Throws std::invalid_argument for an unknown name.
RadicalKind radical_kind_from_string(std::string_view name);

/// Intersection of the proper submodules N whose quotient lies in the class.
struct RadicalReport {
    std::string module;
    RadicalKind kind = RadicalKind::prime;
    Submodule result;
    std::vector<Submodule> contributors;
    /// No qualifying submodule existed, so the result is M.
    bool convention_applied = false;
};

/// Whether M/N belongs to the class defining the radical (n proper).
bool quotient_in_class(const FiniteModule& m, const Submodule& n, RadicalKind kind);

RadicalReport radical(const FiniteModule& m, RadicalKind kind);
RadicalReport prime_radical(const FiniteModule& m);
RadicalReport completely_prime_radical(const FiniteModule& m);
RadicalReport faithful_completely_prime_radical(const FiniteModule& m);

/// Radical of a submodule N computed on N as a module, lifted back into M.
Submodule radical_of_submodule(const FiniteModule& m, const Submodule& n, RadicalKind kind);

/// Quotient vanishing, the bound gamma(N) within N meet gamma(M), and
/// idempotence gamma(gamma(M)) = gamma(M).  Never throws on a failed law.
std::vector<Verdict> evaluate_radical_laws(const FiniteModule& m, RadicalKind kind);
/// As above, throwing TheoremViolation on the first failed law.
std::vector<Verdict> check_radical_laws(const FiniteModule& m, RadicalKind kind);

/// Class a module must belong to before hereditariness is asserted.
enum class ModuleClass { any, semisimple, ifp };

/// gamma(N) = N meet gamma(M) for every submodule N.  PreconditionError when m
/// is outside `filter`.  Witness sets {N}.
std::vector<Verdict> check_hereditary(const FiniteModule& m, RadicalKind kind, ModuleClass filter);

/// N essential in M with N faithful completely prime => M faithful completely
/// prime.  Preconditions: n essential, m IFP.
std::vector<Verdict> check_essential_closure(const FiniteModule& m, const Submodule& n);

struct TorsionTheoryReport {
    RadicalKind kind = RadicalKind::prime;
    std::vector<std::string> universe;
    /// Indices into `universe`.  The zero module sits in both classes.
    std::vector<std::size_t> torsion_class;
    std::vector<std::size_t> torsionfree_class;
    /// Hom(T, F) = 0; Hom(C, F) = 0 for all F => C in T; Hom(T, C) = 0 for all T => C in F.
    /// The last two quantify over the universe only.
    std::vector<Verdict> axioms;
};

/// All modules must share one ring (PreconditionError otherwise).  Failed
/// axioms are reported, not thrown.
TorsionTheoryReport torsion_theory_over_universe(const std::vector<FiniteModule>& universe, RadicalKind kind,
                                                 const Limits& limits = {});

}  // namespace cprime
