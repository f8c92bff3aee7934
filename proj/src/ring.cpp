#include "cprime/ring.hpp"

#include <stdexcept>

#include "cprime/detail/closure.hpp"
#include "cprime/errors.hpp"

namespace cprime {

namespace {

void check_table(const std::vector<Index>& t, Index size, const char* which)
{
    if (t.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
        throw StructuralError(std::string(which) + " table must be " + std::to_string(size) + "x" + std::to_string(size));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= size) {
            throw StructuralError(std::string(which) + " table entry " + std::to_string(i) + " out of range: " +
                                  std::to_string(t[i]));
        }
    }
}

Verdict ring_fail(const char* axiom, std::vector<Index> elems)
{
    return Verdict::fail("ring_axioms", Witness{std::move(elems), {}, {}}, axiom);
}

Index checked_power(Index base, Index exponent, Index bound)
{
    std::int64_t size = 1;
    for (Index i = 0; i < exponent; ++i) {
        size *= base;
        if (size > bound) return -1;
    }
    return static_cast<Index>(size);
}

}  // namespace

FiniteRing::FiniteRing(std::string name, Index size, std::vector<Index> add, std::vector<Index> mul, Index zero, Index one)
    : name_(std::move(name)), size_(size), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one)
{
    if (size_ < 1) throw StructuralError("ring size must be positive");
    check_table(add_, size_, "add");
    check_table(mul_, size_, "mul");
    if (zero_ < 0 || zero_ >= size_) throw StructuralError("zero index out of range");
    if (one_ < 0 || one_ >= size_) throw StructuralError("one index out of range");
    if (zero_ == one_) throw StructuralError("ring must be nontrivial (zero == one)");
    neg_.assign(static_cast<std::size_t>(size_), -1);
    for (Index a = 0; a < size_; ++a) {
        for (Index b = 0; b < size_; ++b) {
            if (this->add(a, b) == zero_) {
                neg_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
    }
}

bool FiniteRing::same_structure(const FiniteRing& other) const noexcept
{
    return size_ == other.size_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
           mul_ == other.mul_;
}

RingPtr make_zn(Index n, const Limits& limits)
{
    if (n < 2) throw std::invalid_argument("Z_n requires n >= 2, got " + std::to_string(n));
    if (n > limits.max_ring_size) throw CapacityError("Z_" + std::to_string(n) + " exceeds the ring size bound");
    std::vector<Index> add(static_cast<std::size_t>(n * n));
    std::vector<Index> mul(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            add[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
            mul[static_cast<std::size_t>(i * n + j)] = (i * j) % n;
        }
    }
    return validated(FiniteRing("Z" + std::to_string(n), n, std::move(add), std::move(mul), 0, 1));
}

Index encode_matrix(const FiniteRing& base, Index k, const std::vector<Index>& entries)
{
    Index code = 0;
    for (Index pos = k * k - 1; pos >= 0; --pos) code = code * base.size() + entries[static_cast<std::size_t>(pos)];
    return code;
}

std::vector<Index> decode_matrix(const FiniteRing& base, Index k, Index element)
{
    std::vector<Index> entries(static_cast<std::size_t>(k * k));
    for (auto& e : entries) {
        e = element % base.size();
        element /= base.size();
    }
    return entries;
}

RingPtr make_matrix_ring(const RingPtr& base, Index k, const Limits& limits)
{
    if (k < 1) throw std::invalid_argument("matrix size must be at least 1");
    const Index size = checked_power(base->size(), k * k, limits.max_ring_size);
    if (size < 0) throw CapacityError("M_" + std::to_string(k) + "(" + base->name() + ") exceeds the ring size bound");

    std::vector<std::vector<Index>> decoded;
    decoded.reserve(static_cast<std::size_t>(size));
    for (Index e = 0; e < size; ++e) decoded.push_back(decode_matrix(*base, k, e));

    std::vector<Index> add(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    std::vector<Index> mul(add.size());
    std::vector<Index> tmp(static_cast<std::size_t>(k * k));
    for (Index x = 0; x < size; ++x) {
        const auto& a = decoded[static_cast<std::size_t>(x)];
        for (Index y = 0; y < size; ++y) {
            const auto& b = decoded[static_cast<std::size_t>(y)];
            for (std::size_t p = 0; p < tmp.size(); ++p) tmp[p] = base->add(a[p], b[p]);
            add[static_cast<std::size_t>(x * size + y)] = encode_matrix(*base, k, tmp);
            for (Index i = 0; i < k; ++i) {
                for (Index j = 0; j < k; ++j) {
                    Index acc = base->zero();
                    for (Index l = 0; l < k; ++l) {
                        acc = base->add(acc, base->mul(a[static_cast<std::size_t>(i * k + l)],
                                                       b[static_cast<std::size_t>(l * k + j)]));
                    }
                    tmp[static_cast<std::size_t>(i * k + j)] = acc;
                }
            }
            mul[static_cast<std::size_t>(x * size + y)] = encode_matrix(*base, k, tmp);
        }
    }
    std::vector<Index> zero(static_cast<std::size_t>(k * k), base->zero());
    std::vector<Index> ident = zero;
    for (Index i = 0; i < k; ++i) ident[static_cast<std::size_t>(i * k + i)] = base->one();
    std::string name = "M" + std::to_string(k) + "(" + base->name() + ")";
    return validated(FiniteRing(std::move(name), size, std::move(add), std::move(mul), encode_matrix(*base, k, zero),
                                encode_matrix(*base, k, ident)));
}

RingPtr make_product_ring(const RingPtr& a, const RingPtr& b, const Limits& limits)
{
    const std::int64_t size64 = static_cast<std::int64_t>(a->size()) * b->size();
    if (size64 > limits.max_ring_size) throw CapacityError(a->name() + "x" + b->name() + " exceeds the ring size bound");
    const Index size = static_cast<Index>(size64);
    const Index nb = b->size();
    std::vector<Index> add(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    std::vector<Index> mul(add.size());
    for (Index x = 0; x < size; ++x) {
        for (Index y = 0; y < size; ++y) {
            const auto idx = static_cast<std::size_t>(x * size + y);
            add[idx] = a->add(x / nb, y / nb) * nb + b->add(x % nb, y % nb);
            mul[idx] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
        }
    }
    return validated(FiniteRing(a->name() + "x" + b->name(), size, std::move(add), std::move(mul),
                                a->zero() * nb + b->zero(), a->one() * nb + b->one()));
}

Verdict validate_ring(const FiniteRing& r)
{
    const Index n = r.size();
    const Index z = r.zero();
    const Index o = r.one();
    for (Index a = 0; a < n; ++a) {
        if (r.add(a, z) != a || r.add(z, a) != a) return ring_fail("additive identity", {a});
    }
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) return ring_fail("additive commutativity", {a, b});
        }
    }
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            for (Index c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return ring_fail("additive associativity", {a, b, c});
            }
        }
    }
    for (Index a = 0; a < n; ++a) {
        if (r.neg(a) < 0) return ring_fail("additive inverse", {a});
    }
    for (Index a = 0; a < n; ++a) {
        if (r.mul(a, o) != a || r.mul(o, a) != a) return ring_fail("multiplicative identity", {a});
    }
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const Index ab = r.mul(a, b);
            for (Index c = 0; c < n; ++c) {
                if (r.mul(ab, c) != r.mul(a, r.mul(b, c))) return ring_fail("multiplicative associativity", {a, b, c});
            }
        }
    }
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            for (Index c = 0; c < n; ++c) {
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return ring_fail("left distributivity", {a, b, c});
                if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return ring_fail("right distributivity", {a, b, c});
            }
        }
    }
    return Verdict::pass("ring_axioms");
}

RingPtr validated(FiniteRing r)
{
    auto v = validate_ring(r);
    if (!v) throw ValidationError("ring " + r.name() + " fails " + v.note + " at " + describe(v.witness), v.witness);
    return std::make_shared<const FiniteRing>(std::move(r));
}

bool is_additive_subgroup(const FiniteRing& r, const RingSubset& s)
{
    if (!s.contains(r.zero())) return false;
    const auto m = s.members();
    for (Index x : m) {
        for (Index y : m) {
            if (!s.contains(r.add(x, y))) return false;
        }
    }
    return true;
}

bool is_left_ideal(const FiniteRing& r, const RingSubset& s)
{
    if (s.universe() != r.size() || !is_additive_subgroup(r, s)) return false;
    for (Index x : s.members()) {
        for (Index a = 0; a < r.size(); ++a) {
            if (!s.contains(r.mul(a, x))) return false;
        }
    }
    return true;
}

bool is_two_sided_ideal(const FiniteRing& r, const RingSubset& s)
{
    if (!is_left_ideal(r, s)) return false;
    for (Index x : s.members()) {
        for (Index a = 0; a < r.size(); ++a) {
            if (!s.contains(r.mul(x, a))) return false;
        }
    }
    return true;
}

RingSubset principal_left_ideal(const FiniteRing& r, Index a)
{
    RingSubset s(r.size());
    for (Index x = 0; x < r.size(); ++x) s.insert(r.mul(x, a));
    return s;
}

RingSubset principal_two_sided_ideal(const FiniteRing& r, Index a)
{
    RingSubset seed(r.size());
    for (Index s = 0; s < r.size(); ++s) {
        const Index sa = r.mul(s, a);
        for (Index t = 0; t < r.size(); ++t) seed.insert(r.mul(sa, t));
    }
    return detail::additive_closure(std::move(seed), r.zero(), [&](Index x, Index y) { return r.add(x, y); });
}

std::vector<RingSubset> enumerate_left_ideals(const FiniteRing& r)
{
    std::vector<RingSubset> cyclic;
    for (Index a = 0; a < r.size(); ++a) cyclic.push_back(principal_left_ideal(r, a));
    return detail::join_closure(cyclic, RingSubset(r.size(), {r.zero()}), [&](Index x, Index y) { return r.add(x, y); });
}

std::vector<RingSubset> enumerate_two_sided_ideals(const FiniteRing& r)
{
    std::vector<RingSubset> cyclic;
    for (Index a = 0; a < r.size(); ++a) cyclic.push_back(principal_two_sided_ideal(r, a));
    return detail::join_closure(cyclic, RingSubset(r.size(), {r.zero()}), [&](Index x, Index y) { return r.add(x, y); });
}

Verdict is_domain(const FiniteRing& r)
{
    for (Index a = 0; a < r.size(); ++a) {
        if (a == r.zero()) continue;
        for (Index b = 0; b < r.size(); ++b) {
            if (b != r.zero() && r.mul(a, b) == r.zero()) return Verdict::fail("domain", Witness{{a, b}, {}, {}});
        }
    }
    return Verdict::pass("domain");
}

Verdict is_commutative(const FiniteRing& r)
{
    for (Index a = 0; a < r.size(); ++a) {
        for (Index b = a + 1; b < r.size(); ++b) {
            if (r.mul(a, b) != r.mul(b, a)) return Verdict::fail("commutative", Witness{{a, b}, {}, {}});
        }
    }
    return Verdict::pass("commutative");
}

Verdict is_chain_ring(const FiniteRing& r)
{
    const auto ideals = enumerate_two_sided_ideals(r);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            if (!ideals[i].subset_of(ideals[j]) && !ideals[j].subset_of(ideals[i])) {
                return Verdict::fail("chain_ring", Witness{{}, {}, {ideals[i], ideals[j]}});
            }
        }
    }
    return Verdict::pass("chain_ring");
}

Verdict is_left_duo(const FiniteRing& r)
{
    for (const auto& ideal : enumerate_left_ideals(r)) {
        for (Index x : ideal.members()) {
            for (Index a = 0; a < r.size(); ++a) {
                if (!ideal.contains(r.mul(x, a))) return Verdict::fail("left_duo", Witness{{x, a}, {}, {ideal}});
            }
        }
    }
    return Verdict::pass("left_duo");
}

namespace {

/// ab in I, a not in I, b not in I.  Least (a, b).
Verdict prime_scan(const FiniteRing& r, const RingSubset& ideal, const char* property)
{
    for (Index a = 0; a < r.size(); ++a) {
        if (ideal.contains(a)) continue;
        for (Index b = 0; b < r.size(); ++b) {
            if (!ideal.contains(b) && ideal.contains(r.mul(a, b))) {
                return Verdict::fail(property, Witness{{a, b}, {}, {ideal}});
            }
        }
    }
    return Verdict::pass(property);
}

}  // namespace

Verdict is_fully_completely_prime_ring(const FiniteRing& r, IdealSide side)
{
    const auto ideals = side == IdealSide::two_sided ? enumerate_two_sided_ideals(r) : enumerate_left_ideals(r);
    for (const auto& ideal : ideals) {
        if (ideal.is_full()) continue;
        auto v = prime_scan(r, ideal, "fully_completely_prime_ring");
        if (!v) return v;
    }
    return Verdict::pass("fully_completely_prime_ring");
}

Verdict principal_ideals_square_stable(const FiniteRing& r)
{
    for (Index a = 0; a < r.size(); ++a) {
        if (principal_two_sided_ideal(r, a) != principal_two_sided_ideal(r, r.mul(a, a))) {
            return Verdict::fail("principal_square_stable", Witness{{a}, {}, {}});
        }
    }
    return Verdict::pass("principal_square_stable");
}

Verdict is_completely_prime_ideal(const FiniteRing& r, const RingSubset& i)
{
    if (!is_two_sided_ideal(r, i)) throw PreconditionError(i.to_string() + " is not a two-sided ideal of " + r.name());
    if (i.is_full()) throw PreconditionError("completely prime ideals must be proper");
    return prime_scan(r, i, "completely_prime_ideal");
}

Verdict is_reyes_completely_prime_left_ideal(const FiniteRing& r, const RingSubset& p)
{
    if (!is_left_ideal(r, p)) throw PreconditionError(p.to_string() + " is not a left ideal of " + r.name());
    if (p.is_full()) throw PreconditionError("completely prime left ideals must be proper");
    const auto members = p.members();
    for (Index a = 0; a < r.size(); ++a) {
        if (p.contains(a)) continue;
        bool stabilises = true;
        for (Index x : members) {
            if (!p.contains(r.mul(x, a))) {
                stabilises = false;
                break;
            }
        }
        if (!stabilises) continue;
        for (Index b = 0; b < r.size(); ++b) {
            if (!p.contains(b) && p.contains(r.mul(a, b))) {
                return Verdict::fail("reyes_completely_prime", Witness{{a, b}, {}, {p}});
            }
        }
    }
    return Verdict::pass("reyes_completely_prime");
}

Verdict is_boolean(const FiniteRing& r)
{
    for (Index a = 0; a < r.size(); ++a) {
        if (r.mul(a, a) != a) return Verdict::fail("idempotent_elements", Witness{{a}, {}, {}});
    }
    return Verdict::pass("idempotent_elements");
}

}  // namespace cprime
