#include "cprime/radical.hpp"

#include <optional>
#include <stdexcept>

#include "cprime/classify.hpp"
#include "cprime/errors.hpp"

namespace cprime {

namespace {

std::string set_pair(const Submodule& a, const Submodule& b) { return a.to_string() + " vs " + b.to_string(); }

}  // namespace

std::string_view to_string(RadicalKind kind) noexcept
{
    switch (kind) {
        case RadicalKind::prime: return "prime";
        case RadicalKind::completely_prime: return "completely_prime";
        case RadicalKind::faithful_completely_prime: return "faithful_completely_prime";
    }
    return "?";
}

RadicalKind radical_kind_from_string(std::string_view name)
{
    for (auto k : {RadicalKind::prime, RadicalKind::completely_prime, RadicalKind::faithful_completely_prime}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown radical kind: " + std::string(name));
}

bool quotient_in_class(const FiniteModule& m, const Submodule& n, RadicalKind kind)
{
    switch (kind) {
        case RadicalKind::prime: return is_prime_submodule(m, n).holds;
        case RadicalKind::completely_prime: return is_completely_prime_submodule(m, n).holds;
        case RadicalKind::faithful_completely_prime:
            return annihilator_of_module(m, n).count() == 1 && is_completely_prime_submodule(m, n).holds;
    }
    return false;
}

RadicalReport radical(const FiniteModule& m, RadicalKind kind)
{
    RadicalReport rep;
    rep.module = m.name();
    rep.kind = kind;
    rep.result = m.whole();
    for (const auto& n : enumerate_submodules(m)) {
        if (n.is_full() || !quotient_in_class(m, n, kind)) continue;
        rep.contributors.push_back(n);
        rep.result &= n;
    }
    rep.convention_applied = rep.contributors.empty();
    return rep;
}

RadicalReport prime_radical(const FiniteModule& m) { return radical(m, RadicalKind::prime); }

RadicalReport completely_prime_radical(const FiniteModule& m) { return radical(m, RadicalKind::completely_prime); }

RadicalReport faithful_completely_prime_radical(const FiniteModule& m)
{
    return radical(m, RadicalKind::faithful_completely_prime);
}

Submodule radical_of_submodule(const FiniteModule& m, const Submodule& n, RadicalKind kind)
{
    const auto induced = induced_module(m, n);
    return induced.lift(radical(induced.module, kind).result, m.size());
}

std::vector<Verdict> evaluate_radical_laws(const FiniteModule& m, RadicalKind kind)
{
    const std::string k(to_string(kind));
    const auto g = radical(m, kind).result;
    std::vector<Verdict> out;

    Verdict vanish = Verdict::pass(k + ".quotient_vanishing");
    if (g.is_full()) {
        vanish.note = "gamma(M) = M";
    } else {
        const auto q = quotient(m, g);
        const auto gq = radical(q.module, kind).result;
        if (gq != q.module.zero_submodule()) {
            Submodule preimage(m.size());
            for (Index x = 0; x < m.size(); ++x) {
                if (gq.contains(q.projection[static_cast<std::size_t>(x)])) preimage.insert(x);
            }
            vanish = Verdict::fail(vanish.property, Witness{{}, {}, {g, preimage}}, "gamma(M/gamma(M)) != 0");
        }
    }
    out.push_back(vanish);

    Verdict bound = Verdict::pass(k + ".submodule_bound");
    for (const auto& n : enumerate_submodules(m)) {
        const auto gn = radical_of_submodule(m, n, kind);
        if (!gn.subset_of(n & g)) {
            bound = Verdict::fail(bound.property, Witness{{}, {}, {n, gn}}, "gamma(N) not within N meet gamma(M)");
            break;
        }
    }
    out.push_back(bound);

    Verdict idem = Verdict::pass(k + ".idempotence");
    const auto gg = radical_of_submodule(m, g, kind);
    if (gg != g) idem = Verdict::fail(idem.property, Witness{{}, {}, {g, gg}}, "gamma(gamma(M)) != gamma(M)");
    out.push_back(idem);
    return out;
}

std::vector<Verdict> check_radical_laws(const FiniteModule& m, RadicalKind kind)
{
    auto out = evaluate_radical_laws(m, kind);
    for (const auto& v : out) {
        if (!v.holds) throw TheoremViolation("radical_laws", m.name() + ": " + v.property + " fails", v.witness);
    }
    return out;
}

std::vector<Verdict> check_hereditary(const FiniteModule& m, RadicalKind kind, ModuleClass filter)
{
    if (filter == ModuleClass::semisimple && !is_semisimple(m)) {
        throw PreconditionError(m.name() + " is not semisimple");
    }
    if (filter == ModuleClass::ifp && !is_ifp_module(m)) throw PreconditionError(m.name() + " is not IFP");
    const auto g = radical(m, kind).result;
    std::vector<Verdict> out;
    for (const auto& n : enumerate_submodules(m)) {
        const auto gn = radical_of_submodule(m, n, kind);
        const std::string p = std::string(to_string(kind)) + ".hereditary";
        if (gn != (n & g)) {
            throw TheoremViolation("hereditary", m.name() + ": gamma(N) != N meet gamma(M) at " + set_pair(gn, n & g),
                                   Witness{{}, {}, {n}});
        }
        out.push_back(Verdict{p, true, Witness{{}, {}, {n}}, {}});
    }
    return out;
}

std::vector<Verdict> check_essential_closure(const FiniteModule& m, const Submodule& n)
{
    if (!is_submodule(m, n)) throw PreconditionError(n.to_string() + " is not a submodule of " + m.name());
    if (!is_essential(m, n)) throw PreconditionError(n.to_string() + " is not essential in " + m.name());
    if (!is_ifp_module(m)) throw PreconditionError(m.name() + " is not IFP");
    const auto induced = induced_module(m, n).module;
    const bool sub_fcp = is_faithful(induced).holds && is_completely_prime_module(induced).holds;
    Verdict sub = sub_fcp ? Verdict::pass("submodule_faithful_completely_prime")
                          : Verdict::fail("submodule_faithful_completely_prime", Witness{{}, {}, {n}});
    if (!sub_fcp) return {sub};
    const auto faithful = is_faithful(m);
    const auto cp = is_completely_prime_module(m);
    if (!faithful || !cp) {
        throw TheoremViolation("essential_closure",
                               m.name() + ": essential submodule " + n.to_string() +
                                   " is faithful completely prime but M is not",
                               faithful ? cp.witness : faithful.witness);
    }
    return {sub, faithful, cp};
}

TorsionTheoryReport torsion_theory_over_universe(const std::vector<FiniteModule>& universe, RadicalKind kind,
                                                 const Limits& limits)
{
    TorsionTheoryReport rep;
    rep.kind = kind;
    for (const auto& m : universe) {
        if (!same_ring(m.ring(), universe.front().ring())) {
            throw PreconditionError("torsion universe mixes rings: " + m.ring().name() + " and " +
                                    universe.front().ring().name());
        }
        rep.universe.push_back(m.name());
    }
    const std::size_t n = universe.size();
    std::vector<bool> in_t(n), in_f(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto g = radical(universe[i], kind).result;
        in_t[i] = g.is_full();
        in_f[i] = g.count() == 1;
        if (in_t[i]) rep.torsion_class.push_back(i);
        if (in_f[i]) rep.torsionfree_class.push_back(i);
    }

    std::vector<std::vector<std::optional<bool>>> cache(n, std::vector<std::optional<bool>>(n));
    const auto nonzero_hom = [&](std::size_t i, std::size_t j) {
        if (!cache[i][j]) cache[i][j] = has_nonzero_hom(universe[i], universe[j], limits);
        return *cache[i][j];
    };
    const auto pair_note = [&](std::size_t i, std::size_t j) { return rep.universe[i] + " -> " + rep.universe[j]; };

    Verdict ax1 = Verdict::pass("hom_torsion_to_torsionfree_vanishes");
    for (std::size_t t : rep.torsion_class) {
        for (std::size_t f : rep.torsionfree_class) {
            if (!ax1.holds || universe[t].is_zero_module() || universe[f].is_zero_module()) continue;
            if (nonzero_hom(t, f)) ax1 = Verdict::fail(ax1.property, {}, pair_note(t, f));
        }
    }
    Verdict ax2 = Verdict::pass("torsion_class_maximal");
    for (std::size_t c = 0; c < n && ax2.holds; ++c) {
        if (in_t[c]) continue;
        bool all_zero = true;
        for (std::size_t f : rep.torsionfree_class) all_zero = all_zero && !nonzero_hom(c, f);
        if (all_zero) ax2 = Verdict::fail(ax2.property, {}, rep.universe[c] + " kills every torsion-free module");
    }
    Verdict ax3 = Verdict::pass("torsionfree_class_maximal");
    for (std::size_t c = 0; c < n && ax3.holds; ++c) {
        if (in_f[c]) continue;
        bool all_zero = true;
        for (std::size_t t : rep.torsion_class) all_zero = all_zero && !nonzero_hom(t, c);
        if (all_zero) ax3 = Verdict::fail(ax3.property, {}, rep.universe[c] + " receives no torsion module");
    }
    ax2.note += ax2.note.empty() ? "universe-relative" : " (universe-relative)";
    ax3.note += ax3.note.empty() ? "universe-relative" : " (universe-relative)";
    rep.axioms = {ax1, ax2, ax3};
    return rep;
}

}  // namespace cprime
