#include "cprime/module.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "cprime/detail/closure.hpp"
#include "cprime/errors.hpp"

namespace cprime {

struct FiniteModule::Cache {
    std::once_flag lattice_once;
    std::vector<Submodule> lattice;
};

namespace {

void check_module_table(const std::vector<Index>& t, std::size_t expected, Index range, const char* which)
{
    if (t.size() != expected) throw StructuralError(std::string(which) + " table has wrong dimensions");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= range) {
            throw StructuralError(std::string(which) + " table entry " + std::to_string(i) + " out of range: " +
                                  std::to_string(t[i]));
        }
    }
}

Verdict module_fail(const char* axiom, std::vector<Index> ring_elems, std::vector<Index> module_elems)
{
    return Verdict::fail("module_axioms", Witness{std::move(ring_elems), std::move(module_elems), {}}, axiom);
}

}  // namespace

FiniteModule::FiniteModule(RingPtr ring, std::string name, Index size, std::vector<Index> add, std::vector<Index> act,
                           Index zero)
    : ring_(std::move(ring)),
      name_(std::move(name)),
      size_(size),
      add_(std::move(add)),
      act_(std::move(act)),
      zero_(zero),
      cache_(std::make_shared<Cache>())
{
    if (!ring_) throw StructuralError("module needs a ring");
    if (size_ < 1) throw StructuralError("module size must be positive");
    const auto n = static_cast<std::size_t>(size_);
    check_module_table(add_, n * n, size_, "add");
    check_module_table(act_, static_cast<std::size_t>(ring_->size()) * n, size_, "act");
    if (zero_ < 0 || zero_ >= size_) throw StructuralError("zero index out of range");
    neg_.assign(n, -1);
    for (Index x = 0; x < size_; ++x) {
        for (Index y = 0; y < size_; ++y) {
            if (this->add(x, y) == zero_) {
                neg_[static_cast<std::size_t>(x)] = y;
                break;
            }
        }
    }
}

bool FiniteModule::same_tables(const FiniteModule& other) const noexcept
{
    return same_ring(*ring_, *other.ring_) && size_ == other.size_ && zero_ == other.zero_ && add_ == other.add_ &&
           act_ == other.act_;
}

FiniteModule FiniteModule::renamed(std::string name) const
{
    FiniteModule copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) noexcept
{
    return &a == &b || a.same_structure(b);
}

Verdict validate_module(const FiniteModule& m, AxiomCheck check)
{
    const Index n = m.size();
    const Index z = m.zero();
    const auto& r = m.ring();
    for (Index x = 0; x < n; ++x) {
        if (m.add(x, z) != x || m.add(z, x) != x) return module_fail("additive identity", {}, {x});
    }
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (m.add(x, y) != m.add(y, x)) return module_fail("additive commutativity", {}, {x, y});
        }
    }
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            for (Index w = 0; w < n; ++w) {
                if (m.add(m.add(x, y), w) != m.add(x, m.add(y, w))) return module_fail("additive associativity", {}, {x, y, w});
            }
        }
    }
    for (Index x = 0; x < n; ++x) {
        if (m.neg(x) < 0) return module_fail("additive inverse", {}, {x});
    }
    for (Index a = 0; a < r.size(); ++a) {
        for (Index x = 0; x < n; ++x) {
            for (Index y = 0; y < n; ++y) {
                if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y))) {
                    return module_fail("r(m+n) = rm + rn", {a}, {x, y});
                }
            }
        }
    }
    if (check == AxiomCheck::full) {
        for (Index a = 0; a < r.size(); ++a) {
            for (Index b = 0; b < r.size(); ++b) {
                for (Index x = 0; x < n; ++x) {
                    if (m.act(r.add(a, b), x) != m.add(m.act(a, x), m.act(b, x))) {
                        return module_fail("(r+s)m = rm + sm", {a, b}, {x});
                    }
                }
            }
        }
    }
    for (Index a = 0; a < r.size(); ++a) {
        for (Index b = 0; b < r.size(); ++b) {
            for (Index x = 0; x < n; ++x) {
                if (m.act(r.mul(a, b), x) != m.act(a, m.act(b, x))) return module_fail("(rs)m = r(sm)", {a, b}, {x});
            }
        }
    }
    for (Index x = 0; x < n; ++x) {
        if (m.act(r.one(), x) != x) return module_fail("1m = m", {r.one()}, {x});
    }
    return Verdict::pass("module_axioms");
}

FiniteModule make_module_from_tables(RingPtr ring, std::string name, Index size, std::vector<Index> add,
                                     std::vector<Index> act, Index zero, AxiomCheck check)
{
    FiniteModule m(std::move(ring), std::move(name), size, std::move(add), std::move(act), zero);
    auto v = validate_module(m, check);
    if (!v) throw ValidationError("module " + m.name() + " fails " + v.note + " at " + describe(v.witness), v.witness);
    if (check != AxiomCheck::full) m.module_axioms_hold_ = static_cast<bool>(validate_module(m, AxiomCheck::full));
    return m;
}

FiniteModule make_regular_module(const RingPtr& ring)
{
    return FiniteModule(ring, ring->name(), ring->size(), ring->add_table(), ring->mul_table(), ring->zero());
}

FiniteModule make_zero_module(const RingPtr& ring)
{
    return FiniteModule(ring, "0", 1, {0}, std::vector<Index>(static_cast<std::size_t>(ring->size()), 0), 0);
}

FiniteModule make_direct_sum(const FiniteModule& a, const FiniteModule& b, const Limits& limits)
{
    if (!same_ring(a.ring(), b.ring())) throw PreconditionError("direct sum of modules over different rings");
    const std::int64_t size64 = static_cast<std::int64_t>(a.size()) * b.size();
    if (size64 > limits.max_module_size) throw CapacityError(a.name() + "+" + b.name() + " exceeds the module size bound");
    const Index size = static_cast<Index>(size64);
    const Index nb = b.size();
    const Index nr = a.ring().size();
    std::vector<Index> add(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    std::vector<Index> act(static_cast<std::size_t>(nr) * static_cast<std::size_t>(size));
    for (Index x = 0; x < size; ++x) {
        for (Index y = 0; y < size; ++y) {
            add[static_cast<std::size_t>(x * size + y)] = a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb);
        }
        for (Index r = 0; r < nr; ++r) {
            act[static_cast<std::size_t>(r * size + x)] = a.act(r, x / nb) * nb + b.act(r, x % nb);
        }
    }
    auto wrap = [](const std::string& s) { return s.find('+') == std::string::npos ? s : "(" + s + ")"; };
    FiniteModule sum(a.ring_ptr(), wrap(a.name()) + "+" + wrap(b.name()), size, std::move(add), std::move(act),
                     a.zero() * nb + b.zero());
    sum.module_axioms_hold_ = a.module_axioms_hold_ && b.module_axioms_hold_;
    return sum;
}

bool is_submodule(const FiniteModule& m, const ElementSet& s)
{
    if (s.universe() != m.size() || !s.contains(m.zero())) return false;
    const auto members = s.members();
    for (Index x : members) {
        for (Index y : members) {
            if (!s.contains(m.add(x, y))) return false;
        }
        for (Index r = 0; r < m.ring().size(); ++r) {
            if (!s.contains(m.act(r, x))) return false;
        }
    }
    return true;
}

Submodule generated_submodule(const FiniteModule& m, const ElementSet& seed)
{
    Submodule s(m.size(), {m.zero()});
    std::vector<Index> all{m.zero()};
    std::vector<Index> queue;
    auto push = [&](Index x) {
        if (!s.contains(x)) {
            s.insert(x);
            queue.push_back(x);
        }
    };
    for (Index x : seed.members()) push(x);
    while (!queue.empty()) {
        const Index x = queue.back();
        queue.pop_back();
        all.push_back(x);
        for (Index r = 0; r < m.ring().size(); ++r) push(m.act(r, x));
        for (std::size_t j = 0; j < all.size(); ++j) push(m.add(x, all[j]));
    }
    return s;
}

Submodule cyclic_submodule(const FiniteModule& m, Index x)
{
    return generated_submodule(m, ElementSet(m.size(), {x}));
}

const std::vector<Submodule>& enumerate_submodules(const FiniteModule& m)
{
    std::call_once(m.cache_->lattice_once, [&] {
        std::vector<ElementSet> cyclic;
        cyclic.reserve(static_cast<std::size_t>(m.size()));
        for (Index x = 0; x < m.size(); ++x) cyclic.push_back(cyclic_submodule(m, x));
        m.cache_->lattice = detail::join_closure(cyclic, m.zero_submodule(), [&](Index x, Index y) { return m.add(x, y); });
    });
    return m.cache_->lattice;
}

QuotientModule quotient(const FiniteModule& m, const Submodule& n)
{
    if (!is_submodule(m, n)) throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    const Index size = m.size();
    std::vector<Index> projection(static_cast<std::size_t>(size), -1);
    std::vector<Index> reps;
    const auto members = n.members();
    for (Index x = 0; x < size; ++x) {
        if (projection[static_cast<std::size_t>(x)] >= 0) continue;
        const auto c = static_cast<Index>(reps.size());
        reps.push_back(x);
        for (Index y : members) projection[static_cast<std::size_t>(m.add(x, y))] = c;
    }
    const auto q = static_cast<Index>(reps.size());
    const Index nr = m.ring().size();
    std::vector<Index> add(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    std::vector<Index> act(static_cast<std::size_t>(nr) * static_cast<std::size_t>(q));
    for (Index c = 0; c < q; ++c) {
        for (Index d = 0; d < q; ++d) {
            add[static_cast<std::size_t>(c * q + d)] =
                projection[static_cast<std::size_t>(m.add(reps[static_cast<std::size_t>(c)], reps[static_cast<std::size_t>(d)]))];
        }
        for (Index r = 0; r < nr; ++r) {
            act[static_cast<std::size_t>(r * q + c)] =
                projection[static_cast<std::size_t>(m.act(r, reps[static_cast<std::size_t>(c)]))];
        }
    }
    // Representative independence over every element, not just the chosen representatives.
    for (Index x = 0; x < size; ++x) {
        const Index px = projection[static_cast<std::size_t>(x)];
        for (Index y = 0; y < size; ++y) {
            if (projection[static_cast<std::size_t>(m.add(x, y))] !=
                add[static_cast<std::size_t>(px * q + projection[static_cast<std::size_t>(y)])]) {
                throw ValidationError("quotient addition depends on representatives", Witness{{}, {x, y}, {n}});
            }
        }
        for (Index r = 0; r < nr; ++r) {
            if (projection[static_cast<std::size_t>(m.act(r, x))] != act[static_cast<std::size_t>(r * q + px)]) {
                throw ValidationError("quotient action depends on representatives", Witness{{r}, {x}, {n}});
            }
        }
    }
    FiniteModule qm(m.ring_ptr(), m.name() + "/" + n.to_string(), q, std::move(add), std::move(act),
                    projection[static_cast<std::size_t>(m.zero())]);
    qm.module_axioms_hold_ = m.module_axioms_hold_;
    return QuotientModule{std::move(qm), n, std::move(projection), std::move(reps)};
}

ElementSet InducedModule::lift(const ElementSet& s, Index parent_size) const
{
    ElementSet out(parent_size);
    for (Index i : s.members()) out.insert(embedding[static_cast<std::size_t>(i)]);
    return out;
}

InducedModule induced_module(const FiniteModule& m, const Submodule& n)
{
    if (!is_submodule(m, n)) throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    const auto members = n.members();
    const auto k = static_cast<Index>(members.size());
    std::vector<Index> relabel(static_cast<std::size_t>(m.size()), -1);
    for (Index i = 0; i < k; ++i) relabel[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;
    const Index nr = m.ring().size();
    std::vector<Index> add(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    std::vector<Index> act(static_cast<std::size_t>(nr) * static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) {
        const Index x = members[static_cast<std::size_t>(i)];
        for (Index j = 0; j < k; ++j) {
            add[static_cast<std::size_t>(i * k + j)] =
                relabel[static_cast<std::size_t>(m.add(x, members[static_cast<std::size_t>(j)]))];
        }
        for (Index r = 0; r < nr; ++r) act[static_cast<std::size_t>(r * k + i)] = relabel[static_cast<std::size_t>(m.act(r, x))];
    }
    FiniteModule sub(m.ring_ptr(), m.name() + "[" + n.to_string() + "]", k, std::move(add), std::move(act),
                     relabel[static_cast<std::size_t>(m.zero())]);
    sub.module_axioms_hold_ = m.module_axioms_hold_;
    return InducedModule{std::move(sub), members};
}

RingSubset annihilator_of_element(const FiniteModule& m, const ElementSet& s, Index x, ColonConvention convention)
{
    if (convention == ColonConvention::strict && s.contains(x)) {
        throw PreconditionError("(S:x) with x in S under the strict convention");
    }
    RingSubset out(m.ring().size());
    for (Index r = 0; r < m.ring().size(); ++r) {
        if (s.contains(m.act(r, x))) out.insert(r);
    }
    return out;
}

RingSubset annihilator_of_module(const FiniteModule& m, const Submodule& n)
{
    if (!is_submodule(m, n)) throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    RingSubset out(m.ring().size());
    for (Index r = 0; r < m.ring().size(); ++r) {
        bool inside = true;
        for (Index x = 0; x < m.size() && inside; ++x) inside = n.contains(m.act(r, x));
        if (inside) out.insert(r);
    }
    return out;
}

RingSubset annihilator(const FiniteModule& m)
{
    return annihilator_of_module(m, m.zero_submodule());
}

RingSubset annihilator_of_subset(const FiniteModule& m, const ElementSet& s)
{
    RingSubset out = m.ring().all();
    const auto members = s.members();
    for (Index r = 0; r < m.ring().size(); ++r) {
        for (Index x : members) {
            if (m.act(r, x) != m.zero()) {
                out.erase(r);
                break;
            }
        }
    }
    return out;
}

RingSubset zd_set(const FiniteModule& m, const Submodule& n)
{
    if (!is_submodule(m, n)) throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    if (n.is_full()) throw PreconditionError("Zd(M/N) is undefined for N = M");
    RingSubset out(m.ring().size());
    for (Index x = 0; x < m.size(); ++x) {
        if (!n.contains(x)) out |= annihilator_of_element(m, n, x);
    }
    return out;
}

bool acts_trivially(const FiniteModule& m)
{
    for (Index r = 0; r < m.ring().size(); ++r) {
        for (Index x = 0; x < m.size(); ++x) {
            if (m.act(r, x) != m.zero()) return false;
        }
    }
    return true;
}

Index additive_exponent(const FiniteModule& m)
{
    Index e = 1;
    for (Index x = 0; x < m.size(); ++x) {
        Index order = 1;
        for (Index y = x; y != m.zero(); y = m.add(y, x)) ++order;
        if (x == m.zero()) order = 1;
        e = std::lcm(e, order);
    }
    return e;
}

std::vector<Index> generating_sequence(const FiniteModule& m)
{
    std::vector<Index> gens;
    Submodule span = m.zero_submodule();
    for (Index x = 0; x < m.size(); ++x) {
        if (span.contains(x)) continue;
        gens.push_back(x);
        ElementSet seed = span;
        seed.insert(x);
        span = generated_submodule(m, seed);
    }
    return gens;
}

namespace {

/// Partial map defined on a submodule, extended by closure.
struct PartialHom {
    ModuleMap image;
    std::vector<Index> known;
};

bool extend(PartialHom& p, Index x, Index t, const FiniteModule& a, const FiniteModule& b)
{
    std::vector<std::pair<Index, Index>> queue{{x, t}};
    while (!queue.empty()) {
        auto [u, fu] = queue.back();
        queue.pop_back();
        auto& slot = p.image[static_cast<std::size_t>(u)];
        if (slot >= 0) {
            if (slot != fu) return false;
            continue;
        }
        slot = fu;
        p.known.push_back(u);
        for (Index r = 0; r < a.ring().size(); ++r) queue.emplace_back(a.act(r, u), b.act(r, fu));
        const std::size_t known_now = p.known.size();
        for (std::size_t j = 0; j < known_now; ++j) {
            const Index y = p.known[j];
            queue.emplace_back(a.add(u, y), b.add(fu, p.image[static_cast<std::size_t>(y)]));
        }
    }
    return true;
}

bool search(const PartialHom& p, std::size_t level, const std::vector<Index>& gens, const FiniteModule& a,
            const FiniteModule& b, const std::function<bool(const ModuleMap&)>& visit)
{
    if (level == gens.size()) return visit(p.image);
    const Index g = gens[level];
    for (Index t = 0; t < b.size(); ++t) {
        PartialHom next = p;
        if (!extend(next, g, t, a, b)) continue;
        if (!search(next, level + 1, gens, a, b, visit)) return false;
    }
    return true;
}

}  // namespace

void for_each_hom(const FiniteModule& a, const FiniteModule& b, const std::function<bool(const ModuleMap&)>& visit,
                  const Limits& limits)
{
    if (!same_ring(a.ring(), b.ring())) throw PreconditionError("hom between modules over different rings");
    const auto gens = generating_sequence(a);
    if (gens.size() > limits.max_generators) {
        throw CapacityError(a.name() + " needs " + std::to_string(gens.size()) + " generators; bound is " +
                            std::to_string(limits.max_generators));
    }
    PartialHom start{ModuleMap(static_cast<std::size_t>(a.size()), -1), {}};
    if (!extend(start, a.zero(), b.zero(), a, b)) return;
    search(start, 0, gens, a, b, visit);
}

HomSet hom_set(const FiniteModule& a, const FiniteModule& b, const Limits& limits)
{
    HomSet out{a.name(), b.name(), {}};
    for_each_hom(
        a, b,
        [&](const ModuleMap& f) {
            if (out.maps.size() >= limits.max_hom_maps) {
                throw CapacityError("Hom(" + a.name() + ", " + b.name() + ") exceeds the map bound");
            }
            out.maps.push_back(f);
            return true;
        },
        limits);
    return out;
}

bool has_nonzero_hom(const FiniteModule& a, const FiniteModule& b, const Limits& limits)
{
    if (a.is_zero_module() || b.is_zero_module()) return false;
    bool found = false;
    for_each_hom(
        a, b,
        [&](const ModuleMap& f) {
            for (Index v : f) {
                if (v != b.zero()) {
                    found = true;
                    return false;
                }
            }
            return true;
        },
        limits);
    return found;
}

bool is_homomorphism(const FiniteModule& a, const FiniteModule& b, const ModuleMap& f)
{
    if (f.size() != static_cast<std::size_t>(a.size())) return false;
    for (Index v : f) {
        if (v < 0 || v >= b.size()) return false;
    }
    auto F = [&](Index x) { return f[static_cast<std::size_t>(x)]; };
    for (Index x = 0; x < a.size(); ++x) {
        for (Index y = 0; y < a.size(); ++y) {
            if (F(a.add(x, y)) != b.add(F(x), F(y))) return false;
        }
        for (Index r = 0; r < a.ring().size(); ++r) {
            if (F(a.act(r, x)) != b.act(r, F(x))) return false;
        }
    }
    return true;
}

EndoRing endomorphism_ring(const FiniteModule& m, const Limits& limits)
{
    auto homs = hom_set(m, m, limits);
    const auto k = static_cast<Index>(homs.maps.size());
    if (k > limits.max_ring_size) throw CapacityError("End(" + m.name() + ") exceeds the ring size bound");
    if (k == 1) throw PreconditionError("End(" + m.name() + ") is the zero ring");
    std::map<ModuleMap, Index> index;
    for (Index i = 0; i < k; ++i) index.emplace(homs.maps[static_cast<std::size_t>(i)], i);

    ModuleMap zero_map(static_cast<std::size_t>(m.size()), m.zero());
    ModuleMap identity(static_cast<std::size_t>(m.size()));
    std::iota(identity.begin(), identity.end(), 0);

    std::vector<Index> add(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    std::vector<Index> mul(add.size());
    ModuleMap tmp(static_cast<std::size_t>(m.size()));
    for (Index i = 0; i < k; ++i) {
        const auto& f = homs.maps[static_cast<std::size_t>(i)];
        for (Index j = 0; j < k; ++j) {
            const auto& g = homs.maps[static_cast<std::size_t>(j)];
            for (std::size_t x = 0; x < tmp.size(); ++x) tmp[x] = m.add(f[x], g[x]);
            add[static_cast<std::size_t>(i * k + j)] = index.at(tmp);
            for (std::size_t x = 0; x < tmp.size(); ++x) tmp[x] = f[static_cast<std::size_t>(g[x])];
            mul[static_cast<std::size_t>(i * k + j)] = index.at(tmp);
        }
    }
    auto ring = validated(FiniteRing("End(" + m.name() + ")", k, std::move(add), std::move(mul), index.at(zero_map),
                                     index.at(identity)));
    return EndoRing{std::move(ring), std::move(homs.maps)};
}

Verdict is_essential(const FiniteModule& m, const Submodule& n)
{
    if (!is_submodule(m, n)) throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    for (const auto& l : enumerate_submodules(m)) {
        if (l.count() == 1) continue;
        if ((n & l).count() == 1) return Verdict::fail("essential", Witness{{}, {}, {l}});
    }
    return Verdict::pass("essential");
}

Verdict is_direct_summand(const FiniteModule& m, const Submodule& n)
{
    if (!is_submodule(m, n)) throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    for (const auto& k : enumerate_submodules(m)) {
        if ((n & k).count() == 1 && static_cast<std::int64_t>(n.count()) * k.count() == m.size()) {
            Verdict v = Verdict::pass("direct_summand");
            v.witness.sets.push_back(k);
            return v;
        }
    }
    return Verdict::fail("direct_summand", Witness{{}, {}, {n}});
}

Verdict is_semisimple(const FiniteModule& m)
{
    for (const auto& n : enumerate_submodules(m)) {
        if (!is_direct_summand(m, n)) return Verdict::fail("semisimple", Witness{{}, {}, {n}});
    }
    return Verdict::pass("semisimple");
}

Verdict is_simple(const FiniteModule& m)
{
    if (m.is_zero_module()) return Verdict::fail("simple", {}, "zero module");
    const auto& lattice = enumerate_submodules(m);
    if (lattice.size() == 2) return Verdict::pass("simple");
    return Verdict::fail("simple", Witness{{}, {}, {lattice[1]}});
}

Verdict is_uniform(const FiniteModule& m)
{
    if (m.is_zero_module()) return Verdict::fail("uniform", {}, "zero module");
    const auto& lattice = enumerate_submodules(m);
    for (std::size_t i = 1; i < lattice.size(); ++i) {
        for (std::size_t j = i + 1; j < lattice.size(); ++j) {
            if ((lattice[i] & lattice[j]).count() == 1) return Verdict::fail("uniform", Witness{{}, {}, {lattice[i], lattice[j]}});
        }
    }
    return Verdict::pass("uniform");
}

Verdict is_torsion_free(const FiniteModule& m)
{
    if (m.is_zero_module()) return Verdict::fail("torsion_free", {}, "RM = {0}");
    const auto& r = m.ring();
    for (Index x = 0; x < m.size(); ++x) {
        if (x == m.zero()) continue;
        for (Index a = 0; a < r.size(); ++a) {
            if (a != r.zero() && m.act(a, x) == m.zero()) return Verdict::fail("torsion_free", Witness{{a}, {x}, {}});
        }
    }
    return Verdict::pass("torsion_free");
}

Verdict is_faithful(const FiniteModule& m)
{
    const auto ann = annihilator(m);
    for (Index a : ann.members()) {
        if (a != m.ring().zero()) return Verdict::fail("faithful", Witness{{a}, {}, {}});
    }
    return Verdict::pass("faithful");
}

Verdict is_torsionless(const FiniteModule& m, const Limits& limits)
{
    const auto regular = make_regular_module(m.ring_ptr());
    ElementSet covered(m.size());
    covered.insert(m.zero());
    for_each_hom(
        m, regular,
        [&](const ModuleMap& f) {
            for (Index x = 0; x < m.size(); ++x) {
                if (f[static_cast<std::size_t>(x)] != regular.zero()) covered.insert(x);
            }
            return !covered.is_full();
        },
        limits);
    if (covered.is_full()) return Verdict::pass("torsionless");
    for (Index x = 0; x < m.size(); ++x) {
        if (!covered.contains(x)) return Verdict::fail("torsionless", Witness{{}, {x}, {}});
    }
    return Verdict::pass("torsionless");
}

Verdict is_retractable(const FiniteModule& m, const Limits& limits)
{
    for (const auto& n : enumerate_submodules(m)) {
        if (n.count() == 1) continue;
        if (!has_nonzero_hom(m, induced_module(m, n).module, limits)) {
            return Verdict::fail("retractable", Witness{{}, {}, {n}});
        }
    }
    return Verdict::pass("retractable");
}

}  // namespace cprime
