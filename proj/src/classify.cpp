#include "cprime/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "cprime/errors.hpp"
#include "cprime/radical.hpp"

namespace cprime {

namespace {

constexpr const char* kTrivialAction = "RM = {0}";

Verdict trivial_action(const std::string& property) { return Verdict::fail(property, {}, kTrivialAction); }

/// Least element in exactly one of the two sets.
Index first_difference(const ElementSet& a, const ElementSet& b)
{
    for (Index i = 0; i < a.universe(); ++i) {
        if (a.contains(i) != b.contains(i)) return i;
    }
    return -1;
}

/// kills[a] is true when aM = {0}, computed by scanning M.
std::vector<bool> kills_module(const FiniteModule& m)
{
    std::vector<bool> kills(static_cast<std::size_t>(m.ring().size()), true);
    for (Index a = 0; a < m.ring().size(); ++a) {
        for (Index x = 0; x < m.size(); ++x) {
            if (m.act(a, x) != m.zero()) {
                kills[static_cast<std::size_t>(a)] = false;
                break;
            }
        }
    }
    return kills;
}

std::vector<Submodule> proper_submodules(const FiniteModule& m)
{
    std::vector<Submodule> out;
    for (const auto& n : enumerate_submodules(m)) {
        if (!n.is_full()) out.push_back(n);
    }
    return out;
}

void require_proper_submodule(const FiniteModule& m, const Submodule& n)
{
    if (n.universe() != m.size() || !is_submodule(m, n)) {
        throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    }
    if (n.is_full()) throw PreconditionError("submodule predicates need a proper submodule");
}

/// Runs a module predicate on M/N and maps the witness back into M.
template <typename Pred>
Verdict via_quotient(const FiniteModule& m, const Submodule& n, Pred pred, const std::string& property)
{
    require_proper_submodule(m, n);
    const auto q = quotient(m, n);
    Verdict v = pred(q.module);
    v.property = property;
    for (auto& x : v.witness.module_elems) x = q.representatives[static_cast<std::size_t>(x)];
    v.witness.sets = {n};
    return v;
}

Verdict agreement(const std::string& property, const Verdict& a, const Verdict& b)
{
    if (a.holds == b.holds) return Verdict::pass(property);
    const Verdict& failed = a.holds ? b : a;
    return Verdict::fail(property, failed.witness,
                         a.property + "=" + (a.holds ? "T" : "F") + " " + b.property + "=" + (b.holds ? "T" : "F"));
}

[[noreturn]] void violate(const std::string& check, const std::string& what, const Witness& w = {})
{
    throw TheoremViolation(check, what, w);
}

void require_agreement(const std::string& check, const Verdict& a, const Verdict& b)
{
    auto v = agreement(check, a, b);
    if (!v.holds) violate(check, v.note, v.witness);
}

bool is_cyclic(const FiniteModule& m)
{
    for (Index x = 0; x < m.size(); ++x) {
        if (cyclic_submodule(m, x).is_full()) return true;
    }
    return false;
}

}  // namespace

// -- module-level predicates ----------------------------------------------------

Verdict is_completely_prime_module(const FiniteModule& m)
{
    const std::string p = "completely_prime";
    if (acts_trivially(m)) return trivial_action(p);
    const auto kills = kills_module(m);
    for (Index x = 0; x < m.size(); ++x) {
        if (x == m.zero()) continue;
        for (Index a = 0; a < m.ring().size(); ++a) {
            if (m.act(a, x) == m.zero() && !kills[static_cast<std::size_t>(a)]) {
                return Verdict::fail(p, Witness{{a}, {x}, {}}, "ax = 0 but aM != 0");
            }
        }
    }
    return Verdict::pass(p);
}

Verdict completely_prime_by_annihilators(const FiniteModule& m)
{
    const std::string p = "completely_prime_by_annihilators";
    if (acts_trivially(m)) return trivial_action(p);
    const auto ann = annihilator(m);
    for (Index x = 0; x < m.size(); ++x) {
        if (x == m.zero()) continue;
        const auto colon = annihilator_of_element(m, m.zero_submodule(), x);
        if (colon != ann) return Verdict::fail(p, Witness{{first_difference(colon, ann)}, {x}, {}}, "(0:x) != (0:M)");
    }
    return Verdict::pass(p);
}

Verdict is_prime_module(const FiniteModule& m)
{
    const std::string p = "prime";
    if (acts_trivially(m)) return trivial_action(p);
    const auto kills = kills_module(m);
    for (Index x = 0; x < m.size(); ++x) {
        if (x == m.zero()) continue;
        const auto rx = cyclic_submodule(m, x).members();
        for (Index a = 0; a < m.ring().size(); ++a) {
            if (kills[static_cast<std::size_t>(a)]) continue;
            const bool kills_rx = std::all_of(rx.begin(), rx.end(), [&](Index y) { return m.act(a, y) == m.zero(); });
            if (kills_rx) return Verdict::fail(p, Witness{{a}, {x}, {}}, "aRx = 0 but aM != 0");
        }
    }
    return Verdict::pass(p);
}

Verdict prime_by_submodule_annihilators(const FiniteModule& m)
{
    const std::string p = "prime_by_submodule_annihilators";
    if (acts_trivially(m)) return trivial_action(p);
    const auto ann = annihilator(m);
    for (const auto& n : enumerate_submodules(m)) {
        if (n.count() == 1) continue;
        const auto colon = annihilator_of_subset(m, n);
        if (colon != ann) return Verdict::fail(p, Witness{{first_difference(colon, ann)}, {}, {n}}, "(0:N) != (0:M)");
    }
    return Verdict::pass(p);
}

Verdict is_completely_semiprime_module(const FiniteModule& m)
{
    const std::string p = "completely_semiprime";
    const Index rs = m.ring().size();
    for (Index x = 0; x < m.size(); ++x) {
        for (Index a = 0; a < rs; ++a) {
            if (m.act(a, m.act(a, x)) != m.zero()) continue;
            for (Index r = 0; r < rs; ++r) {
                if (m.act(a, m.act(r, x)) != m.zero()) {
                    return Verdict::fail(p, Witness{{a, r}, {x}, {}}, "a(ax) = 0 but arx != 0");
                }
            }
        }
    }
    return Verdict::pass(p);
}

Verdict is_symmetric_module(const FiniteModule& m)
{
    const std::string p = "symmetric";
    const Index rs = m.ring().size();
    for (Index x = 0; x < m.size(); ++x) {
        for (Index a = 0; a < rs; ++a) {
            for (Index b = 0; b < rs; ++b) {
                if (m.act(a, m.act(b, x)) == m.zero() && m.act(b, m.act(a, x)) != m.zero()) {
                    return Verdict::fail(p, Witness{{a, b}, {x}, {}}, "abx = 0 but bax != 0");
                }
            }
        }
    }
    return Verdict::pass(p);
}

Verdict is_ifp_module(const FiniteModule& m)
{
    const std::string p = "ifp";
    const Index rs = m.ring().size();
    for (Index x = 0; x < m.size(); ++x) {
        for (Index a = 0; a < rs; ++a) {
            if (m.act(a, x) != m.zero()) continue;
            for (Index r = 0; r < rs; ++r) {
                if (m.act(a, m.act(r, x)) != m.zero()) {
                    return Verdict::fail(p, Witness{{a, r}, {x}, {}}, "ax = 0 but arx != 0");
                }
            }
        }
    }
    return Verdict::pass(p);
}

Verdict is_two_primal_module(const FiniteModule& m)
{
    const std::string p = "two_primal";
    const auto beta = prime_radical(m).result;
    const auto beta_co = completely_prime_radical(m).result;
    if (beta == beta_co) return Verdict::pass(p);
    return Verdict::fail(p, Witness{{}, {}, {beta, beta_co}}, "prime radical != completely prime radical");
}

Verdict is_coprime_module(const FiniteModule& m)
{
    const std::string p = "coprime";
    if (acts_trivially(m)) return trivial_action(p);
    const auto ann = annihilator(m);
    for (const auto& n : enumerate_submodules(m)) {
        if (n.count() == 1 || n.is_full()) continue;
        const auto colon = annihilator_of_module(m, n);
        if (colon != ann) return Verdict::fail(p, Witness{{first_difference(colon, ann)}, {}, {n}}, "(N:M) != (0:M)");
    }
    return Verdict::pass(p);
}

Verdict is_coprime_with_whole(const FiniteModule& m)
{
    const std::string p = "coprime_with_whole";
    if (acts_trivially(m)) return trivial_action(p);
    const auto ann = annihilator(m);
    for (const auto& n : enumerate_submodules(m)) {
        if (n.count() == 1) continue;
        const auto colon = annihilator_of_module(m, n);
        if (colon != ann) return Verdict::fail(p, Witness{{first_difference(colon, ann)}, {}, {n}}, "(N:M) != (0:M)");
    }
    return Verdict::pass(p);
}

Verdict is_completely_coprime_module(const FiniteModule& m)
{
    const std::string p = "completely_coprime";
    if (acts_trivially(m)) return trivial_action(p);
    const auto ann = annihilator(m);
    for (const auto& n : proper_submodules(m)) {
        for (Index x = 0; x < m.size(); ++x) {
            if (n.contains(x)) continue;
            const auto colon = annihilator_of_element(m, n, x);
            if (colon != ann) {
                return Verdict::fail(p, Witness{{first_difference(colon, ann)}, {x}, {n}}, "(N:x) != (0:M)");
            }
        }
    }
    return Verdict::pass(p);
}

Verdict is_fully_completely_prime_module(const FiniteModule& m)
{
    const std::string p = "fully_completely_prime";
    if (acts_trivially(m)) return trivial_action(p);
    for (const auto& n : proper_submodules(m)) {
        auto v = is_completely_prime_submodule(m, n);
        if (!v.holds) return Verdict::fail(p, v.witness, "M/N is not completely prime");
    }
    return Verdict::pass(p);
}

Verdict is_fully_prime_module(const FiniteModule& m)
{
    const std::string p = "fully_prime";
    if (acts_trivially(m)) return trivial_action(p);
    for (const auto& n : proper_submodules(m)) {
        auto v = is_prime_submodule(m, n);
        if (!v.holds) return Verdict::fail(p, v.witness, "M/N is not prime");
    }
    return Verdict::pass(p);
}

Verdict absorbing_annihilators(const FiniteModule& m)
{
    const std::string p = "absorbing_annihilators";
    if (acts_trivially(m)) return trivial_action(p);
    const auto kills = kills_module(m);
    for (const auto& n : proper_submodules(m)) {
        for (Index x = 0; x < m.size(); ++x) {
            if (n.contains(x)) continue;
            for (Index a = 0; a < m.ring().size(); ++a) {
                if (n.contains(m.act(a, x)) && !kills[static_cast<std::size_t>(a)]) {
                    return Verdict::fail(p, Witness{{a}, {x}, {n}}, "ax in N but aM != 0");
                }
            }
        }
    }
    return Verdict::pass(p);
}

Verdict constant_zero_divisors(const FiniteModule& m)
{
    const std::string p = "constant_zero_divisors";
    if (acts_trivially(m)) return trivial_action(p);
    const auto ann = annihilator(m);
    for (const auto& n : proper_submodules(m)) {
        const auto zd = zd_set(m, n);
        if (zd != ann) return Verdict::fail(p, Witness{{first_difference(zd, ann)}, {}, {n}}, "Zd(M/N) != (0:M)");
    }
    return Verdict::pass(p);
}

// -- submodule-level predicates -------------------------------------------------

Verdict is_completely_prime_submodule(const FiniteModule& m, const Submodule& n)
{
    auto v = via_quotient(m, n, is_completely_prime_module, "completely_prime_submodule");
    const bool by_zero_divisors = annihilator_of_module(m, n) == zd_set(m, n);
    if (by_zero_divisors != v.holds) {
        violate("zero_divisor_criterion",
                "(N:M) = Zd(M/N) is " + std::string(by_zero_divisors ? "true" : "false") +
                    " but M/N completely prime is " + (v.holds ? "true" : "false"),
                Witness{v.witness.ring_elems, v.witness.module_elems, {n}});
    }
    return v;
}

Verdict is_prime_submodule(const FiniteModule& m, const Submodule& n)
{
    return via_quotient(m, n, is_prime_module, "prime_submodule");
}

Verdict is_completely_semiprime_submodule(const FiniteModule& m, const Submodule& n)
{
    return via_quotient(m, n, is_completely_semiprime_module, "completely_semiprime_submodule");
}

Verdict is_symmetric_submodule(const FiniteModule& m, const Submodule& n)
{
    return via_quotient(m, n, is_symmetric_module, "symmetric_submodule");
}

Verdict is_ifp_submodule(const FiniteModule& m, const Submodule& n)
{
    return via_quotient(m, n, is_ifp_module, "ifp_submodule");
}

// -- report ---------------------------------------------------------------------

const Verdict& ClassificationReport::at(const std::string& property) const
{
    for (const auto& v : verdicts) {
        if (v.property == property) return v;
    }
    throw std::out_of_range("no verdict for property " + property);
}

const std::vector<std::string>& classification_properties()
{
    static const std::vector<std::string> props{
        "simple",           "semisimple",  "prime",       "completely_prime", "completely_semiprime", "symmetric",
        "ifp",              "two_primal",  "coprime",          "coprime_with_whole",   "completely_coprime",
        "fully_prime",      "fully_completely_prime",          "torsion_free",         "faithful",
    };
    return props;
}

ClassificationReport classify(const FiniteModule& m)
{
    ClassificationReport rep;
    rep.module = m.name();
    const auto cp = is_completely_prime_module(m);
    const auto pr = is_prime_module(m);
    const auto ccop = is_completely_coprime_module(m);
    const auto fcp = is_fully_completely_prime_module(m);
    rep.verdicts = {
        is_simple(m),
        is_semisimple(m),
        pr,
        cp,
        is_completely_semiprime_module(m),
        is_symmetric_module(m),
        is_ifp_module(m),
        is_two_primal_module(m),
        is_coprime_module(m),
        is_coprime_with_whole(m),
        ccop,
        is_fully_prime_module(m),
        fcp,
        is_torsion_free(m),
        is_faithful(m),
    };
    rep.cross_checks = {
        agreement("completely_prime_characterization", cp, completely_prime_by_annihilators(m)),
        agreement("prime_characterization", pr, prime_by_submodule_annihilators(m)),
        agreement("completely_coprime_equals_fully_completely_prime", ccop, fcp),
    };
    return rep;
}

// -- implication checks -----------------------------------------------------------

std::vector<Verdict> check_implication_chain(const FiniteModule& m)
{
    std::vector<Verdict> chain{is_completely_prime_module(m), is_completely_semiprime_module(m), is_symmetric_module(m),
                               is_ifp_module(m), is_two_primal_module(m)};
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            if (chain[i].holds && !chain[j].holds) {
                violate("implication_chain", m.name() + ": " + chain[i].property + " holds but " + chain[j].property +
                                                 " fails",
                        chain[j].witness);
            }
        }
    }
    return chain;
}

std::vector<Verdict> check_coprime_chart(const FiniteModule& m)
{
    const auto ccop = is_completely_coprime_module(m);
    const auto cp = is_completely_prime_module(m);
    const auto pr = is_prime_module(m);
    const auto cop = is_coprime_module(m);
    const std::pair<const Verdict*, const Verdict*> arrows[] = {{&ccop, &cp}, {&ccop, &cop}, {&cp, &pr}, {&ccop, &pr}};
    for (const auto& [from, to] : arrows) {
        if (from->holds && !to->holds) {
            violate("coprime_chart", m.name() + ": " + from->property + " holds but " + to->property + " fails",
                    to->witness);
        }
    }
    return {ccop, cp, pr, cop};
}

std::vector<Verdict> check_zero_divisor_criterion(const FiniteModule& m)
{
    std::vector<Verdict> out;
    for (const auto& n : proper_submodules(m)) out.push_back(is_completely_prime_submodule(m, n));
    return out;
}

std::vector<Verdict> check_equivalences(const FiniteModule& m)
{
    std::vector<Verdict> forms{is_completely_coprime_module(m), is_fully_completely_prime_module(m),
                               absorbing_annihilators(m), constant_zero_divisors(m)};
    for (std::size_t i = 1; i < forms.size(); ++i) require_agreement("equivalences", forms[0], forms[i]);
    const auto cp = is_completely_prime_module(m);
    const auto cp2 = completely_prime_by_annihilators(m);
    require_agreement("completely_prime_characterization", cp, cp2);
    const auto pr = is_prime_module(m);
    const auto pr2 = prime_by_submodule_annihilators(m);
    require_agreement("prime_characterization", pr, pr2);
    forms.insert(forms.end(), {cp, cp2, pr, pr2});
    return forms;
}

std::vector<Verdict> check_commutative_collapse(const FiniteModule& m)
{
    if (!is_commutative(m.ring())) throw PreconditionError(m.ring().name() + " is not commutative");
    const auto pr = is_prime_module(m);
    const auto cp = is_completely_prime_module(m);
    require_agreement("commutative_collapse", pr, cp);
    return {pr, cp};
}

std::vector<Verdict> check_coprime_action(const FiniteModule& m)
{
    if (!is_completely_coprime_module(m)) throw PreconditionError(m.name() + " is not completely co-prime");
    const Index rs = m.ring().size();
    const Index bound = additive_exponent(m) + 1;
    for (Index x = 0; x < m.size(); ++x) {
        for (Index a = 0; a < rs; ++a) {
            for (Index b = 0; b < rs; ++b) {
                if (m.act(a, m.act(b, x)) != m.act(b, m.act(a, x))) {
                    violate("coprime_action", m.name() + ": abx != bax", Witness{{a, b}, {x}, {}});
                }
            }
        }
    }
    for (Index x = 0; x < m.size(); ++x) {
        for (Index a = 0; a < rs; ++a) {
            Index power = m.act(a, x);
            for (Index k = 2; k <= bound; ++k) {
                power = m.act(a, power);
                if (power != m.act(a, x)) {
                    violate("coprime_action", m.name() + ": ax != a^" + std::to_string(k) + "x", Witness{{a}, {x}, {}});
                }
            }
        }
    }
    for (Index x = 0; x < m.size(); ++x) {
        for (Index a = 0; a < rs; ++a) {
            for (Index b = 0; b < rs; ++b) {
                const Index abx = m.act(a, m.act(b, x));
                if (m.act(a, x) != abx && m.act(b, x) != abx) {
                    violate("coprime_action", m.name() + ": ax != abx and bx != abx", Witness{{a, b}, {x}, {}});
                }
            }
        }
    }
    return {Verdict::pass("commuting_action"), Verdict::pass("power_stable_action"), Verdict::pass("absorbing_action")};
}

std::vector<Verdict> check_coprime_ring(const FiniteModule& m)
{
    if (!is_torsion_free(m) || !is_completely_coprime_module(m)) {
        throw PreconditionError(m.name() + " is not torsion-free and completely co-prime");
    }
    const auto& r = m.ring();
    std::vector<Verdict> out{is_boolean(r), is_commutative(r), is_fully_completely_prime_ring(r)};
    Verdict absorb = Verdict::pass("pairwise_absorption");
    for (Index a = 0; a < r.size() && absorb.holds; ++a) {
        for (Index b = 0; b < r.size(); ++b) {
            const Index ab = r.mul(a, b);
            if (a != ab && b != ab) {
                absorb = Verdict::fail("pairwise_absorption", Witness{{a, b}, {}, {}}, "a != ab and b != ab");
                break;
            }
        }
    }
    out.push_back(absorb);
    for (const auto& v : out) {
        if (!v.holds) violate("coprime_ring", r.name() + ": " + v.property + " fails", v.witness);
    }
    return out;
}

std::vector<Verdict> check_endomorphism_criterion(const FiniteModule& m, const Limits& limits)
{
    if (acts_trivially(m)) throw PreconditionError(kTrivialAction);
    const auto ends = hom_set(m, m, limits);
    Verdict injective = Verdict::pass("nonzero_endomorphisms_injective");
    for (const auto& f : ends.maps) {
        const bool zero = std::all_of(f.begin(), f.end(), [&](Index y) { return y == m.zero(); });
        if (zero) continue;
        auto sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            injective = Verdict::fail(injective.property, Witness{{}, f, {}}, "non-injective nonzero endomorphism");
            break;
        }
    }
    const auto retract = is_retractable(m, limits);
    const auto domain = is_domain(*endomorphism_ring(m, limits).ring);
    const auto cp = is_completely_prime_module(m);
    if (injective.holds && !cp.holds) {
        violate("endomorphism_criterion",
                m.name() + ": every nonzero endomorphism is injective but M is not completely prime", cp.witness);
    }
    if (retract.holds && domain.holds && !cp.holds) {
        violate("endomorphism_criterion", m.name() + ": retractable with End(M) a domain but M is not completely prime",
                cp.witness);
    }
    return {injective, retract, domain, cp};
}

std::vector<Verdict> check_torsion_free_criterion(const FiniteModule& m)
{
    const auto tf = is_torsion_free(m);
    if (!tf) throw PreconditionError(m.name() + " is not torsion-free");
    const auto cp = is_completely_prime_module(m);
    const auto faithful = is_faithful(m);
    if (!cp) violate("torsion_free_criterion", m.name() + ": torsion-free but not completely prime", cp.witness);
    if (!faithful) violate("torsion_free_criterion", m.name() + ": torsion-free but not faithful", faithful.witness);
    return {tf, cp, faithful};
}

std::vector<Verdict> check_uniform_criterion(const FiniteModule& m)
{
    if (acts_trivially(m) || !is_uniform(m)) throw PreconditionError(m.name() + " is not a uniform module with RM != 0");
    const auto cp = is_completely_prime_module(m);
    Verdict cyclic = Verdict::pass("cyclic_submodules_completely_prime");
    for (Index x = 0; x < m.size() && cyclic.holds; ++x) {
        if (x == m.zero()) continue;
        const auto c = cyclic_submodule(m, x);
        const auto induced = induced_module(m, c);
        auto v = is_completely_prime_module(induced.module);
        if (!v.holds) {
            for (auto& y : v.witness.module_elems) y = induced.embedding[static_cast<std::size_t>(y)];
            v.witness.sets = {c};
            cyclic = Verdict::fail(cyclic.property, v.witness, "Rx is not completely prime");
        }
    }
    require_agreement("uniform_criterion", cp, cyclic);
    return {cp, cyclic};
}

std::vector<Verdict> check_left_duo_lift(const FiniteModule& m)
{
    const auto duo = is_left_duo(m.ring());
    const auto fp = is_fully_prime_module(m);
    if (!duo || !fp) throw PreconditionError(m.name() + " is not fully prime over a left-duo ring");
    const auto fcp = is_fully_completely_prime_module(m);
    if (!fcp) violate("left_duo_lift", m.name() + ": fully prime over a left-duo ring but not fully completely prime",
                      fcp.witness);
    return {duo, fp, fcp};
}

std::vector<Verdict> check_annihilator_criterion(const FiniteModule& m)
{
    if (acts_trivially(m)) throw PreconditionError(kTrivialAction);
    const auto& r = m.ring();
    const auto ideals = enumerate_left_ideals(r);
    const auto maximal = [&](const RingSubset& i) {
        if (i.is_full()) return false;
        return std::none_of(ideals.begin(), ideals.end(), [&](const RingSubset& j) {
            return i.subset_of(j) && i != j && !j.is_full();
        });
    };
    const auto minimal = [&](const RingSubset& i) {
        if (i.count() == 1) return false;
        return std::none_of(ideals.begin(), ideals.end(), [&](const RingSubset& j) {
            return j.subset_of(i) && i != j && j.count() > 1;
        });
    };
    Verdict max_hyp = Verdict::pass("element_annihilators_maximal");
    for (Index x = 0; x < m.size() && max_hyp.holds; ++x) {
        if (x == m.zero()) continue;
        if (!maximal(annihilator_of_element(m, m.zero_submodule(), x))) {
            max_hyp = Verdict::fail(max_hyp.property, Witness{{}, {x}, {}});
        }
    }
    Verdict min_hyp = Verdict::pass("colon_ideals_minimal");
    for (const auto& n : proper_submodules(m)) {
        for (Index x = 0; x < m.size() && min_hyp.holds; ++x) {
            if (!n.contains(x) && !minimal(annihilator_of_element(m, n, x))) {
                min_hyp = Verdict::fail(min_hyp.property, Witness{{}, {x}, {n}});
            }
        }
        if (!min_hyp.holds) break;
    }
    if (!max_hyp && !min_hyp) throw PreconditionError(m.name() + ": neither annihilator hypothesis holds");
    const auto ccop = is_completely_coprime_module(m);
    if (!ccop) {
        violate("annihilator_criterion",
                m.name() + ": " + (max_hyp.holds ? max_hyp.property : min_hyp.property) +
                    " holds but M is not completely co-prime",
                ccop.witness);
    }
    return {max_hyp, min_hyp, ccop};
}

std::vector<Verdict> check_cyclic_over_fcp_ring(const FiniteModule& m)
{
    const auto ring_fcp = is_fully_completely_prime_ring(m.ring());
    if (acts_trivially(m) || !ring_fcp || !is_cyclic(m)) {
        throw PreconditionError(m.name() + " is not a nonzero cyclic module over a fully completely prime ring");
    }
    const auto fcp = is_fully_completely_prime_module(m);
    if (!fcp) {
        violate("cyclic_over_fcp_ring",
                m.name() + ": cyclic over a fully completely prime ring but not fully completely prime", fcp.witness);
    }
    return {ring_fcp, fcp};
}

std::vector<Verdict> check_hirano(const FiniteRing& r)
{
    const auto fcp = is_fully_completely_prime_ring(r);
    const auto chain = is_chain_ring(r);
    const auto square = principal_ideals_square_stable(r);
    Verdict rhs = Verdict::pass("chain_and_square_stable");
    if (!chain) rhs = Verdict::fail(rhs.property, chain.witness, "not a chain ring");
    else if (!square) rhs = Verdict::fail(rhs.property, square.witness, "(a) != (a^2)");
    require_agreement("hirano", fcp, rhs);
    return {fcp, chain, square};
}

std::vector<Verdict> check_free_module(const RingPtr& r, int k)
{
    if (k < 1 || k > 2) throw std::invalid_argument("free module rank must be 1 or 2");
    if (!is_domain(*r)) throw PreconditionError(r->name() + " is not a domain");
    const auto reg = make_regular_module(r);
    const auto m = k == 1 ? reg : make_direct_sum(reg, reg);
    const auto cp = is_completely_prime_module(m);
    if (!cp) violate("free_module", m.name() + ": free over a domain but not completely prime", cp.witness);
    return {cp};
}

}  // namespace cprime
