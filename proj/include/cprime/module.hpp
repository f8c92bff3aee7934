#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cprime/ring.hpp"

namespace cprime {

/// Member set of a submodule (value object; identity = members).
using Submodule = ElementSet;

struct QuotientModule;
struct InducedModule;

/// Which module axioms a constructor enforces.
enum class AxiomCheck {
    full,
    /// Everything except (r+s)m = rm + sm.  Only for reproducing literature
    /// data that violates it; the result reports `is_module() == false`.
    skip_scalar_additivity,
};

/// Finite left unital module over a FiniteRing, given by tables.
///
/// `act` is indexed ring-first: act(r, x) = r*x.  Instances are immutable;
/// the submodule lattice is computed once on first use and shared between
/// copies.
class FiniteModule {
public:
    /// Shape checks only (StructuralError).  Use `make_module_from_tables` for
    /// a validated module.
    FiniteModule(RingPtr ring, std::string name, Index size, std::vector<Index> add, std::vector<Index> act, Index zero);

    [[nodiscard]] const FiniteRing& ring() const noexcept { return *ring_; }
    [[nodiscard]] const RingPtr& ring_ptr() const noexcept { return ring_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] Index size() const noexcept { return size_; }
    [[nodiscard]] Index zero() const noexcept { return zero_; }
    [[nodiscard]] bool is_zero_module() const noexcept { return size_ == 1; }

    [[nodiscard]] Index add(Index x, Index y) const noexcept { return add_[static_cast<std::size_t>(x * size_ + y)]; }
    [[nodiscard]] Index act(Index r, Index x) const noexcept { return act_[static_cast<std::size_t>(r * size_ + x)]; }
    [[nodiscard]] Index neg(Index x) const noexcept { return neg_[static_cast<std::size_t>(x)]; }

    [[nodiscard]] const std::vector<Index>& add_table() const noexcept { return add_; }
    [[nodiscard]] const std::vector<Index>& act_table() const noexcept { return act_; }

    /// False when built with AxiomCheck::skip_scalar_additivity and that axiom fails.
    [[nodiscard]] bool is_module() const noexcept { return module_axioms_hold_; }

    [[nodiscard]] Submodule zero_submodule() const { return Submodule(size_, {zero_}); }
    [[nodiscard]] Submodule whole() const { return Submodule::full(size_); }

    /// Same ring structure and identical tables.
    [[nodiscard]] bool same_tables(const FiniteModule& other) const noexcept;

    FiniteModule renamed(std::string name) const;

private:
    friend FiniteModule make_module_from_tables(RingPtr, std::string, Index, std::vector<Index>, std::vector<Index>,
                                                Index, AxiomCheck);
    friend const std::vector<Submodule>& enumerate_submodules(const FiniteModule&);
    friend QuotientModule quotient(const FiniteModule&, const ElementSet&);
    friend InducedModule induced_module(const FiniteModule&, const ElementSet&);
    friend FiniteModule make_direct_sum(const FiniteModule&, const FiniteModule&, const Limits&);

    struct Cache;

    RingPtr ring_;
    std::string name_;
    Index size_;
    std::vector<Index> add_;
    std::vector<Index> act_;
    std::vector<Index> neg_;
    Index zero_;
    bool module_axioms_hold_ = true;
    std::shared_ptr<Cache> cache_;
};

/// Every module axiom, scanned exhaustively.  `note` names the failing axiom.
Verdict validate_module(const FiniteModule& m, AxiomCheck check = AxiomCheck::full);

/// Validated constructor.  Throws ValidationError with the failing tuple.
FiniteModule make_module_from_tables(RingPtr ring, std::string name, Index size, std::vector<Index> add,
                                     std::vector<Index> act, Index zero, AxiomCheck check = AxiomCheck::full);

FiniteModule make_regular_module(const RingPtr& ring);
/// The module of size 1 over `ring`.
FiniteModule make_zero_module(const RingPtr& ring);
/// (x, y) has index x * b.size() + y.  Throws PreconditionError on ring mismatch.
FiniteModule make_direct_sum(const FiniteModule& a, const FiniteModule& b, const Limits& limits = {});

bool same_ring(const FiniteRing& a, const FiniteRing& b) noexcept;

// -- submodules --------------------------------------------------------------

bool is_submodule(const FiniteModule& m, const ElementSet& s);
/// Least submodule containing `seed`.
Submodule generated_submodule(const FiniteModule& m, const ElementSet& seed);
/// Rx.
Submodule cyclic_submodule(const FiniteModule& m, Index x);
/// All submodules by join-closure of the cyclic ones, in canonical order.
/// Cached on the module.
const std::vector<Submodule>& enumerate_submodules(const FiniteModule& m);

/// M/N with cosets named by their least member and numbered in that order.
struct QuotientModule {
    FiniteModule module;
    Submodule divisor;
    /// projection[x] = index of the coset of x.
    std::vector<Index> projection;
    /// representatives[c] = least member of coset c.
    std::vector<Index> representatives;
};

/// Throws PreconditionError if `n` is not a submodule.  Representative
/// independence of the induced tables is checked exhaustively.
QuotientModule quotient(const FiniteModule& m, const Submodule& n);

/// N as a standalone module; elements relabelled in sorted-member order.
struct InducedModule {
    FiniteModule module;
    /// embedding[i] = element of the parent.
    std::vector<Index> embedding;

    /// Image of a subset of the induced module in the parent.
    [[nodiscard]] ElementSet lift(const ElementSet& s, Index parent_size) const;
};

InducedModule induced_module(const FiniteModule& m, const Submodule& n);

// -- annihilators ------------------------------------------------------------

/// Convention for (S:x) when x is in S.
enum class ColonConvention {
    /// Any x accepted.
    extended,
    /// x must lie outside S (PreconditionError otherwise).
    strict,
};

/// (S:x) = { r : r x in S }.
RingSubset annihilator_of_element(const FiniteModule& m, const ElementSet& s, Index x,
                                  ColonConvention convention = ColonConvention::extended);
/// (N:M) = { r : r M in N }.  Throws PreconditionError if n is not a submodule.
RingSubset annihilator_of_module(const FiniteModule& m, const Submodule& n);
/// (0:M).
RingSubset annihilator(const FiniteModule& m);
/// (0:S) = { r : r S = 0 }.
RingSubset annihilator_of_subset(const FiniteModule& m, const ElementSet& s);
/// Zd(M/N) = union of (N:x) over x outside N.  PreconditionError if n = M.
RingSubset zd_set(const FiniteModule& m, const Submodule& n);

/// RM = {0}.
bool acts_trivially(const FiniteModule& m);
/// Exponent of the additive group.
Index additive_exponent(const FiniteModule& m);

// -- homomorphisms -----------------------------------------------------------

/// A map as the list of images of source elements 0..n-1.
using ModuleMap = std::vector<Index>;

struct HomSet {
    std::string source;
    std::string target;
    std::vector<ModuleMap> maps;
};

/// Greedy generating sequence: repeatedly the least element outside the span.
std::vector<Index> generating_sequence(const FiniteModule& m);

/// Calls `visit` on every homomorphism a -> b in lexicographic order of the
/// generator images.  Stop early by returning false.  Every reported map has
/// had additivity and equivariance checked on all pairs.
void for_each_hom(const FiniteModule& a, const FiniteModule& b, const std::function<bool(const ModuleMap&)>& visit,
                  const Limits& limits = {});

HomSet hom_set(const FiniteModule& a, const FiniteModule& b, const Limits& limits = {});
bool has_nonzero_hom(const FiniteModule& a, const FiniteModule& b, const Limits& limits = {});
bool is_homomorphism(const FiniteModule& a, const FiniteModule& b, const ModuleMap& f);

struct EndoRing {
    RingPtr ring;
    /// maps[i] is the endomorphism with ring index i.
    std::vector<ModuleMap> maps;
};

/// End(M) under pointwise addition and composition ((fg)(x) = f(g(x))).
EndoRing endomorphism_ring(const FiniteModule& m, const Limits& limits = {});

// -- structural predicates ---------------------------------------------------

/// Witness sets = {L} with L nonzero and N meet L = {0}.
Verdict is_essential(const FiniteModule& m, const Submodule& n);
/// Holds with witness sets = {K}, the least complement; fails with empty witness.
Verdict is_direct_summand(const FiniteModule& m, const Submodule& n);
Verdict is_semisimple(const FiniteModule& m);
Verdict is_simple(const FiniteModule& m);
Verdict is_uniform(const FiniteModule& m);
/// (0:x) = {0} for every nonzero x, and M nonzero.  Witness (r, x).
Verdict is_torsion_free(const FiniteModule& m);
/// (0:M) = {0}.  Witness ring_elems = {least nonzero annihilator}.
Verdict is_faithful(const FiniteModule& m);
/// Every nonzero x survives some hom M -> R.  Witness module_elems = {x}.
Verdict is_torsionless(const FiniteModule& m, const Limits& limits = {});
/// Hom(M, N) != 0 for every nonzero submodule N.  Witness sets = {N}.
Verdict is_retractable(const FiniteModule& m, const Limits& limits = {});

}  // namespace cprime
