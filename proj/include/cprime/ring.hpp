#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cprime/element_set.hpp"
#include "cprime/verdict.hpp"

namespace cprime {

/// Size bounds for constructed structures.
struct Limits {
    Index max_ring_size = 256;
    Index max_module_size = 256;
    /// Upper bound on the number of maps a hom-set enumeration may produce.
    std::size_t max_hom_maps = std::size_t{1} << 16;
    /// Upper bound on the length of a generating sequence used for hom search.
    std::size_t max_generators = 8;
};

/// Finite unital associative ring given by full Cayley tables.
///
/// The constructor checks only the shape (square tables, indices in range,
/// zero != one).  Ring axioms are checked by `validate_ring`; the `make_*`
/// factories and the JSON loader only hand out validated rings.
class FiniteRing {
public:
    FiniteRing(std::string name, Index size, std::vector<Index> add, std::vector<Index> mul, Index zero, Index one);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] Index size() const noexcept { return size_; }
    [[nodiscard]] Index zero() const noexcept { return zero_; }
    [[nodiscard]] Index one() const noexcept { return one_; }

    [[nodiscard]] Index add(Index a, Index b) const noexcept { return add_[static_cast<std::size_t>(a * size_ + b)]; }
    [[nodiscard]] Index mul(Index a, Index b) const noexcept { return mul_[static_cast<std::size_t>(a * size_ + b)]; }
    /// Additive inverse; -1 if the add table has no inverse for `a`.
    [[nodiscard]] Index neg(Index a) const noexcept { return neg_[static_cast<std::size_t>(a)]; }

    [[nodiscard]] const std::vector<Index>& add_table() const noexcept { return add_; }
    [[nodiscard]] const std::vector<Index>& mul_table() const noexcept { return mul_; }

    [[nodiscard]] ElementSet empty_set() const { return ElementSet(size_); }
    [[nodiscard]] ElementSet all() const { return ElementSet::full(size_); }

    /// Same tables and distinguished elements (names are ignored).
    [[nodiscard]] bool same_structure(const FiniteRing& other) const noexcept;

private:
    std::string name_;
    Index size_;
    std::vector<Index> add_;
    std::vector<Index> mul_;
    std::vector<Index> neg_;
    Index zero_;
    Index one_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Carrier for left ideals, two-sided ideals, annihilators and zero-divisor sets.
using RingSubset = ElementSet;

enum class IdealSide { left, two_sided };

// -- construction ------------------------------------------------------------

/// Z_n with (i+j) mod n and (i*j) mod n.  Throws std::invalid_argument for n < 2.
RingPtr make_zn(Index n, const Limits& limits = {});

/// k x k matrices over `base`.  Element index = sum of entry(i,j) * base^(i*k+j),
/// i.e. row-major digits with entry (0,0) least significant.
RingPtr make_matrix_ring(const RingPtr& base, Index k, const Limits& limits = {});
Index encode_matrix(const FiniteRing& base, Index k, const std::vector<Index>& entries);
std::vector<Index> decode_matrix(const FiniteRing& base, Index k, Index element);

/// Componentwise product; (x, y) has index x * b.size() + y.
RingPtr make_product_ring(const RingPtr& a, const RingPtr& b, const Limits& limits = {});

/// All ring axioms, scanned exhaustively.  Witness = first failing tuple.
Verdict validate_ring(const FiniteRing& r);

/// Throws ValidationError carrying the witness if `validate_ring` fails.
RingPtr validated(FiniteRing r);

// -- ideals ------------------------------------------------------------------

bool is_additive_subgroup(const FiniteRing& r, const RingSubset& s);
bool is_left_ideal(const FiniteRing& r, const RingSubset& s);
bool is_two_sided_ideal(const FiniteRing& r, const RingSubset& s);

/// Ra.
RingSubset principal_left_ideal(const FiniteRing& r, Index a);
/// Additive closure of { s a t : s, t in R }.
RingSubset principal_two_sided_ideal(const FiniteRing& r, Index a);

/// Join-closure of the cyclic ideals.  Canonical order; includes {0} and R.
std::vector<RingSubset> enumerate_left_ideals(const FiniteRing& r);
std::vector<RingSubset> enumerate_two_sided_ideals(const FiniteRing& r);

// -- ring predicates -----------------------------------------------------------

Verdict is_domain(const FiniteRing& r);
Verdict is_commutative(const FiniteRing& r);
/// Two-sided ideals totally ordered by inclusion.  Witness sets = incomparable pair.
Verdict is_chain_ring(const FiniteRing& r);
/// Every left ideal is right-closed.  Witness: sets={ideal}, ring_elems={x, r} with x*r outside.
Verdict is_left_duo(const FiniteRing& r);
/// Every proper ideal I (of the given side) satisfies ab in I => a in I or b in I.
Verdict is_fully_completely_prime_ring(const FiniteRing& r, IdealSide side = IdealSide::two_sided);
/// (a) = (a^2) for every a.  Witness ring_elems = {a}.
Verdict principal_ideals_square_stable(const FiniteRing& r);
/// Precondition: `i` a proper two-sided ideal.
Verdict is_completely_prime_ideal(const FiniteRing& r, const RingSubset& i);
/// Precondition: `p` a proper left ideal.  For a, b with Pa in P: ab in P => a in P or b in P.
Verdict is_reyes_completely_prime_left_ideal(const FiniteRing& r, const RingSubset& p);
/// a = a*a for every a.
Verdict is_boolean(const FiniteRing& r);

}  // namespace cprime
