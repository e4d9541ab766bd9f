#include "tancat/zariski.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tancat {

namespace {

const std::vector<std::string>& jet_prefixes() {
    static const std::vector<std::string> prefixes = {"d_", "e_", "f_", "g_", "h_"};
    return prefixes;
}

bool jet_prefixed(const std::string& g) {
    for (const auto& p : jet_prefixes())
        if (g.starts_with(p)) return true;
    return false;
}

}  // namespace

JetNaming::JetNaming(std::vector<std::string> base_gens) : base_(std::move(base_gens)) {
    std::set<std::string> taken(base_.begin(), base_.end());
    for (const auto& p : jet_prefixes()) {
        bool clash = false;
        for (const auto& g : base_)
            if (taken.count(p + g)) clash = true;
        if (!clash) {
            first_ = p;
            break;
        }
    }
    if (first_.empty()) throw TancatError("no fresh jet prefix available for this generator set");
    std::set<std::string> extended = taken;
    for (const auto& g : base_) extended.insert(first_ + g);
    for (const auto& p : jet_prefixes()) {
        bool clash = false;
        for (const auto& g : extended)
            if (extended.count(p + g)) clash = true;
        if (!clash) {
            second_ = p;
            break;
        }
    }
    if (second_.empty())
        throw TancatError("no fresh second-level jet prefix available for this generator set");
}

std::string JetNaming::first_jet(const std::string& g) const {
    if (!is_base(g)) throw TancatError("unknown variable for jet naming: " + g);
    return first_ + g;
}

std::string JetNaming::second_jet(const std::string& g) const {
    if (!is_base(g)) throw TancatError("unknown variable for jet naming: " + g);
    return second_ + g;
}

std::string JetNaming::second_first_jet(const std::string& g) const {
    return second_ + first_jet(g);
}

bool JetNaming::is_base(const std::string& v) const {
    return std::find(base_.begin(), base_.end(), v) != base_.end();
}

bool JetNaming::is_first_jet(const std::string& v) const {
    if (!v.starts_with(first_)) return false;
    return is_base(v.substr(first_.size()));
}

Polynomial total_differential(const Polynomial& f, const JetNaming& naming, int level) {
    if (level != 1 && level != 2) throw TancatError("differential level must be 1 or 2");
    Polynomial out = Polynomial::zero(f.rig());
    for (const auto& v : f.variables()) {
        std::string jet;
        if (level == 1) {
            jet = naming.first_jet(v);
        } else {
            if (!naming.is_base(v) && !naming.is_first_jet(v))
                throw TancatError("unknown variable for jet naming: " + v);
            jet = naming.second_prefix() + v;
        }
        out = out.add(f.partial_derivative(v).mul(Polynomial::variable(f.rig(), jet)));
    }
    return out;
}

namespace {

void require_differentiable(const PresentedAlgebra& b) {
    if (b.rig() != Rig::RAT && !b.relations().empty())
        throw TancatError(
            "tangent presentations need rational coefficients unless the presentation is "
            "relation-free");
}

// The truncation mode kills all products of jet variables: append every
// pairwise product of jet-prefixed generators not already listed.
PresentedAlgebra truncate_jet_products(const PresentedAlgebra& a) {
    std::vector<Polynomial> rels = a.relations();
    auto push_unique = [&](const Polynomial& p) {
        for (const auto& r : rels)
            if (r == p) return;
        rels.push_back(p);
    };
    std::vector<std::string> jets;
    for (const auto& g : a.generators())
        if (jet_prefixed(g)) jets.push_back(g);
    for (size_t i = 0; i < jets.size(); ++i)
        for (size_t j = i; j < jets.size(); ++j)
            push_unique(Polynomial::variable(a.rig(), jets[i])
                            .mul(Polynomial::variable(a.rig(), jets[j])));
    return PresentedAlgebra(a.rig(), a.generators(), std::move(rels));
}

}  // namespace

TangentAlgebra tangent_algebra(const PresentedAlgebra& b, bool truncate_jets) {
    require_differentiable(b);
    JetNaming naming(b.generators());
    std::vector<std::string> gens = b.generators();
    for (const auto& g : b.generators()) gens.push_back(naming.first_jet(g));
    std::vector<Polynomial> rels = b.relations();
    for (const auto& r : b.relations()) rels.push_back(total_differential(r, naming, 1));
    PresentedAlgebra total(b.rig(), std::move(gens), std::move(rels));
    if (truncate_jets) total = truncate_jet_products(total);
    return TangentAlgebra{b, std::move(total), std::move(naming)};
}

PresentedAlgebra second_tangent_algebra(const PresentedAlgebra& b, bool truncate_jets) {
    return tangent_algebra(tangent_algebra(b, truncate_jets).total, truncate_jets).total;
}

AlgebraHom tangent_hom(const AlgebraHom& phi, bool truncate_jets) {
    TangentAlgebra src = tangent_algebra(phi.source(), truncate_jets);
    TangentAlgebra dst = tangent_algebra(phi.target(), truncate_jets);
    std::map<std::string, Polynomial> images;
    for (const auto& g : phi.source().generators()) {
        images.emplace(g, phi.image(g));
        images.emplace(src.naming.first_jet(g), total_differential(phi.image(g), dst.naming, 1));
    }
    return AlgebraHom(src.total, dst.total, std::move(images));
}

PresentedAlgebra tangent_power(const PresentedAlgebra& b, int k, bool truncate_jets) {
    if (k < 1) throw TancatError("tangent power needs at least one slot");
    require_differentiable(b);
    JetNaming naming(b.generators());
    std::vector<std::string> gens = b.generators();
    for (int s = 1; s <= k; ++s)
        for (const auto& g : b.generators())
            gens.push_back(naming.first_jet(g) + "_" + std::to_string(s));
    std::vector<Polynomial> rels = b.relations();
    for (int s = 1; s <= k; ++s) {
        std::map<std::string, Polynomial> slot;
        for (const auto& g : b.generators()) {
            slot.emplace(g, Polynomial::variable(b.rig(), g));
            slot.emplace(naming.first_jet(g),
                         Polynomial::variable(b.rig(),
                                              naming.first_jet(g) + "_" + std::to_string(s)));
        }
        for (const auto& r : b.relations())
            rels.push_back(total_differential(r, naming, 1).substitute(slot));
    }
    PresentedAlgebra power(b.rig(), std::move(gens), std::move(rels));
    if (truncate_jets) power = truncate_jet_products(power);
    return power;
}

AlgebraHom tangent_power_hom(const AlgebraHom& phi, int k, bool truncate_jets) {
    PresentedAlgebra src = tangent_power(phi.source(), k, truncate_jets);
    PresentedAlgebra dst = tangent_power(phi.target(), k, truncate_jets);
    JetNaming sn(phi.source().generators());
    JetNaming dn(phi.target().generators());
    std::map<std::string, Polynomial> images;
    for (const auto& g : phi.source().generators()) images.emplace(g, phi.image(g));
    for (int s = 1; s <= k; ++s) {
        std::map<std::string, Polynomial> slot;
        for (const auto& g : phi.target().generators()) {
            slot.emplace(g, Polynomial::variable(dst.rig(), g));
            slot.emplace(dn.first_jet(g),
                         Polynomial::variable(dst.rig(), dn.first_jet(g) + "_" + std::to_string(s)));
        }
        for (const auto& g : phi.source().generators())
            images.emplace(sn.first_jet(g) + "_" + std::to_string(s),
                           total_differential(phi.image(g), dn, 1).substitute(slot));
    }
    return AlgebraHom(std::move(src), std::move(dst), std::move(images));
}

namespace {

ZariskiStructureMaps build_structure_maps(const PresentedAlgebra& b, bool truncate_jets) {
    TangentAlgebra ta = tangent_algebra(b, truncate_jets);
    const JetNaming& nm = ta.naming;
    PresentedAlgebra t2 = tangent_algebra(ta.total, truncate_jets).total;
    PresentedAlgebra w = tangent_power(b, 2, truncate_jets);
    Rig rg = b.rig();
    auto var = [&](const std::string& v) { return Polynomial::variable(rg, v); };
    Polynomial none = Polynomial::zero(rg);

    std::map<std::string, Polynomial> qi, zi, ai, vi, gi;
    for (const auto& g : b.generators()) {
        std::string dg = nm.first_jet(g);
        std::string eg = nm.second_jet(g);
        std::string edg = nm.second_first_jet(g);
        qi.emplace(g, var(g));
        zi.emplace(g, var(g));
        zi.emplace(dg, none);
        ai.emplace(g, var(g));
        ai.emplace(dg, var(dg + "_1").add(var(dg + "_2")));
        vi.emplace(g, var(g));
        vi.emplace(dg, none);
        vi.emplace(eg, none);
        vi.emplace(edg, var(dg));
        gi.emplace(g, var(g));
        gi.emplace(dg, var(eg));
        gi.emplace(eg, var(dg));
        gi.emplace(edg, var(edg));
    }
    return ZariskiStructureMaps{AlgebraHom(b, ta.total, std::move(qi)),
                                AlgebraHom(ta.total, b, std::move(zi)),
                                AlgebraHom(ta.total, std::move(w), std::move(ai)),
                                AlgebraHom(t2, ta.total, std::move(vi)),
                                AlgebraHom(t2, t2, std::move(gi))};
}

// First source relation whose image misses the target ideal, if any.
std::optional<std::string> ill_defined_relation(const AlgebraHom& h) {
    const IdealPresentation& ideal = h.target().ideal();
    for (const auto& r : h.source().relations())
        if (!ideal_member(h.apply(r), ideal)) return r.str();
    return std::nullopt;
}

// First generator on which two parallel homs disagree modulo the target
// relations, if any.
std::optional<std::string> hom_diff_generator(const AlgebraHom& a, const AlgebraHom& b) {
    const IdealPresentation& ideal = a.target().ideal();
    for (const auto& g : a.source().generators()) {
        const Polynomial& pa = a.image(g);
        const Polynomial& pb = b.image(g);
        if (pa == pb) continue;
        bool same = a.target().rig() == Rig::RAT
                        ? ideal_member(pa.sub(pb), ideal)
                        : normal_form(pa, ideal) == normal_form(pb, ideal);
        if (!same) return g;
    }
    return std::nullopt;
}

AlgebraHom chain(std::vector<AlgebraHom> steps) {
    AlgebraHom acc = steps.front();
    for (size_t i = 1; i < steps.size(); ++i) acc = hom_compose(steps[i], acc);
    return acc;
}

}  // namespace

ZariskiStructureMaps structure_maps(const PresentedAlgebra& b, bool truncate_jets) {
    ZariskiStructureMaps s = build_structure_maps(b, truncate_jets);
    const std::pair<const char*, const AlgebraHom*> named[] = {
        {"q", &s.q}, {"zeta", &s.zeta}, {"add", &s.add}, {"v", &s.v}, {"gamma", &s.gamma}};
    for (const auto& [name, hom] : named)
        if (!hom_well_defined(*hom))
            throw TancatError(std::string("structure map ") + name +
                              " is not well-defined for this presentation");
    return s;
}

Report check_zariski_axioms(const PresentedAlgebra& b, const std::vector<AlgebraHom>& test_homs,
                            bool truncate_jets) {
    Report report;
    ZariskiStructureMaps s = build_structure_maps(b, truncate_jets);
    const PresentedAlgebra& t = s.q.target();
    const PresentedAlgebra& t2 = s.gamma.target();
    const PresentedAlgebra& w = s.add.target();
    JetNaming nm(b.generators());
    Rig rg = b.rig();
    auto var = [&](const std::string& v) { return Polynomial::variable(rg, v); };
    Polynomial none = Polynomial::zero(rg);

    auto add_wd = [&](const std::string& name, const AlgebraHom& h) {
        std::optional<std::string> bad = ill_defined_relation(h);
        report.add("well-defined: " + name, !bad.has_value(), bad.value_or(""));
    };
    add_wd("q", s.q);
    add_wd("zeta", s.zeta);
    add_wd("add", s.add);
    add_wd("v", s.v);
    add_wd("gamma", s.gamma);

    ZariskiStructureMaps st = build_structure_maps(t, truncate_jets);
    const PresentedAlgebra& wp = st.add.target();
    PresentedAlgebra w3 = tangent_power(b, 3, truncate_jets);
    AlgebraHom tq = tangent_hom(s.q, truncate_jets);
    AlgebraHom tzeta = tangent_hom(s.zeta, truncate_jets);
    AlgebraHom tadd = tangent_hom(s.add, truncate_jets);
    AlgebraHom tv = tangent_hom(s.v, truncate_jets);
    AlgebraHom tgamma = tangent_hom(s.gamma, truncate_jets);
    const PresentedAlgebra& tw = tadd.target();
    JetNaming wn(w.generators());

    std::map<std::string, Polynomial> ul, ur, sw, i1, axi, iax, phi_i, psi_i, th;
    for (const auto& g : b.generators()) {
        std::string dg = nm.first_jet(g);
        std::string eg = nm.second_jet(g);
        std::string edg = nm.second_first_jet(g);
        std::string dg1 = dg + "_1", dg2 = dg + "_2", dg3 = dg + "_3";
        ul.emplace(g, var(g));
        ul.emplace(dg1, none);
        ul.emplace(dg2, var(dg));
        ur.emplace(g, var(g));
        ur.emplace(dg1, var(dg));
        ur.emplace(dg2, none);
        sw.emplace(g, var(g));
        sw.emplace(dg1, var(dg2));
        sw.emplace(dg2, var(dg1));
        i1.emplace(g, var(g));
        i1.emplace(dg, var(dg1));
        axi.emplace(g, var(g));
        axi.emplace(dg1, var(dg1).add(var(dg2)));
        axi.emplace(dg2, var(dg3));
        iax.emplace(g, var(g));
        iax.emplace(dg1, var(dg1));
        iax.emplace(dg2, var(dg2).add(var(dg3)));
        phi_i.emplace(g, var(g));
        phi_i.emplace(dg, var(wn.first_jet(g)));
        phi_i.emplace(eg + "_1", var(dg1));
        phi_i.emplace(eg + "_2", var(dg2));
        phi_i.emplace(edg + "_1", var(wn.first_jet(dg1)));
        phi_i.emplace(edg + "_2", var(wn.first_jet(dg2)));
        psi_i.emplace(g, var(g));
        psi_i.emplace(dg, none);
        psi_i.emplace(eg + "_1", none);
        psi_i.emplace(eg + "_2", none);
        psi_i.emplace(edg + "_1", var(dg1));
        psi_i.emplace(edg + "_2", var(dg2));
        th.emplace(g, var(g));
        th.emplace(dg1, none);
        th.emplace(dg2, var(dg2));
        th.emplace(wn.first_jet(g), none);
        th.emplace(wn.first_jet(dg1), var(dg1));
        th.emplace(wn.first_jet(dg2), none);
    }
    AlgebraHom unit_left(w, t, std::move(ul));
    AlgebraHom unit_right(w, t, std::move(ur));
    AlgebraHom swap_w(w, w, std::move(sw));
    AlgebraHom iota1(t, w, std::move(i1));
    AlgebraHom add_x_id(w, w3, std::move(axi));
    AlgebraHom id_x_add(w, w3, std::move(iax));
    AlgebraHom phi_cmp(wp, tw, std::move(phi_i));
    AlgebraHom psi_cmp(wp, w, std::move(psi_i));
    AlgebraHom theta(tw, w, std::move(th));
    AlgebraHom mu = hom_compose(theta, tadd);

    auto add_eq = [&](const std::string& name, const AlgebraHom& lhs, const AlgebraHom& rhs) {
        std::optional<std::string> bad = hom_diff_generator(lhs, rhs);
        report.add(name, !bad.has_value(), bad.value_or(""));
    };

    add_eq("Axiom 2: section", chain({s.q, s.zeta}), AlgebraHom::identity(b));
    add_eq("Axiom 2: left unit", chain({s.add, unit_left}), AlgebraHom::identity(t));
    add_eq("Axiom 2: right unit", chain({s.add, unit_right}), AlgebraHom::identity(t));
    add_eq("Axiom 2: commutativity", chain({s.add, swap_w}), s.add);
    add_eq("Axiom 2: associativity", chain({s.add, add_x_id}), chain({s.add, id_x_add}));
    add_eq("Axiom 2: bundle", chain({s.q, s.add}), chain({s.q, iota1}));

    add_eq("Axiom 3: bundle square", chain({tq, s.v}), chain({s.zeta, s.q}));
    add_eq("Axiom 3: zero", chain({s.v, s.zeta}), chain({st.zeta, s.zeta}));
    add_eq("Axiom 3: additivity", chain({s.v, s.add}), chain({st.add, psi_cmp}));

    add_eq("Axiom 4: bundle square", chain({st.q, s.gamma}), tq);
    add_eq("Axiom 4: zero", chain({s.gamma, tzeta}), st.zeta);
    add_eq("Axiom 4: additivity", chain({st.add, phi_cmp}), chain({s.gamma, tadd}));

    add_eq("Axiom 5: gamma^2=id", chain({s.gamma, s.gamma}), AlgebraHom::identity(t2));
    add_eq("Axiom 5: v gamma=v", chain({s.gamma, s.v}), s.v);
    add_eq("Axiom 5: coassociativity", chain({tv, s.v}), chain({st.v, s.v}));
    add_eq("Axiom 5: hexagon", chain({st.gamma, tgamma, st.gamma}),
           chain({tgamma, st.gamma, tgamma}));
    add_eq("Axiom 5: mixed square", chain({st.gamma, tgamma, st.v}), chain({tv, s.gamma}));

    add_eq("Axiom 6: fork", chain({tq, mu}), chain({s.zeta, s.q, st.q, mu}));
    {
        const IdealPresentation& wideal = w.ideal();
        std::vector<Polynomial> reached;
        for (const auto& g : t2.generators())
            reached.push_back(normal_form(mu.image(g), wideal));
        std::string missing;
        for (const auto& g : w.generators()) {
            Polynomial nf = normal_form(var(g), wideal);
            if (std::find(reached.begin(), reached.end(), nf) == reached.end()) {
                missing = g;
                break;
            }
        }
        report.add("Axiom 6: comparison coverage", missing.empty(), missing);
    }

    for (size_t i = 0; i < test_homs.size(); ++i) {
        const AlgebraHom& f = test_homs[i];
        if (!(f.source() == b))
            throw TancatError("naturality test hom must start at the checked algebra");
        std::string tag = " (hom " + std::to_string(i + 1) + ")";
        ZariskiStructureMaps sc = build_structure_maps(f.target(), truncate_jets);
        AlgebraHom tf = tangent_hom(f, truncate_jets);
        AlgebraHom ttf = tangent_hom(tf, truncate_jets);
        AlgebraHom wf = tangent_power_hom(f, 2, truncate_jets);
        add_eq("naturality: q" + tag, chain({s.q, tf}), chain({f, sc.q}));
        add_eq("naturality: zeta" + tag, chain({s.zeta, f}), chain({tf, sc.zeta}));
        add_eq("naturality: add" + tag, chain({s.add, wf}), chain({tf, sc.add}));
        add_eq("naturality: v" + tag, chain({s.v, tf}), chain({ttf, sc.v}));
        add_eq("naturality: gamma" + tag, chain({s.gamma, ttf}), chain({ttf, sc.gamma}));
    }

    return report;
}

}  // namespace tancat
