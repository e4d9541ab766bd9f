#include "tancat/cdc.hpp"

#include <map>

namespace tancat {

std::string poly_var(int i) { return "x" + std::to_string(i); }

namespace {

// x_i -> x_{i+offset} for i = 1..n.
std::map<std::string, Polynomial> block_shift(Rig rig, int n, int offset) {
    std::map<std::string, Polynomial> images;
    for (int i = 1; i <= n; ++i)
        images.emplace(poly_var(i), Polynomial::variable(rig, poly_var(i + offset)));
    return images;
}

Polynomial var_poly(Rig rig, int i) { return Polynomial::variable(rig, poly_var(i)); }

}  // namespace

PolyMap::PolyMap(Rig rig, int src, int dst, std::vector<Polynomial> components)
    : rig_(rig), src_(src), dst_(dst), components_(std::move(components)) {
    if (src_ < 0 || dst_ < 0) throw TancatError("negative arity");
    if (static_cast<int>(components_.size()) != dst_)
        throw TancatError("component count does not match target arity");
    for (const auto& c : components_) {
        if (c.rig() != rig_) throw RigError("component rig mismatch");
        for (const auto& v : c.variables()) {
            bool ok = false;
            if (v.size() > 1 && v[0] == 'x') {
                int k = 0;
                bool digits = true;
                for (size_t p = 1; p < v.size(); ++p) {
                    if (v[p] < '0' || v[p] > '9') { digits = false; break; }
                    k = k * 10 + (v[p] - '0');
                }
                ok = digits && k >= 1 && k <= src_ &&
                     v == poly_var(k);  // rejects leading zeros like x01
            }
            if (!ok) throw TancatError("component uses variable outside x1..x" +
                                       std::to_string(src_) + ": " + v);
        }
    }
}

std::string PolyMap::str() const {
    std::vector<std::string> order;
    for (int i = 1; i <= src_; ++i) order.push_back(poly_var(i));
    std::string out = "(";
    for (int j = 0; j < dst_; ++j) {
        if (j) out += ", ";
        out += components_[j].str(&order);
    }
    return out + ")";
}

PolyMap pm_identity(Rig rig, int n) {
    std::vector<Polynomial> comps;
    for (int i = 1; i <= n; ++i) comps.push_back(var_poly(rig, i));
    return PolyMap(rig, n, n, std::move(comps));
}

PolyMap pm_block_projection(Rig rig, int src, int start, int count) {
    if (start < 1 || count < 0 || start + count - 1 > src)
        throw TancatError("projection block out of range");
    std::vector<Polynomial> comps;
    for (int i = 0; i < count; ++i) comps.push_back(var_poly(rig, start + i));
    return PolyMap(rig, src, count, std::move(comps));
}

PolyMap pm_zero_map(Rig rig, int src, int dst) {
    return PolyMap(rig, src, dst, std::vector<Polynomial>(dst, Polynomial::zero(rig)));
}

PolyMap pm_compose(const PolyMap& psi, const PolyMap& phi) {
    if (psi.rig() != phi.rig()) throw RigError("composition rig mismatch");
    if (phi.dst() != psi.src()) throw TancatError("composition arity mismatch");
    std::map<std::string, Polynomial> images;
    for (int i = 1; i <= phi.dst(); ++i) images.emplace(poly_var(i), phi.component(i - 1));
    std::vector<Polynomial> comps;
    for (const auto& c : psi.components()) comps.push_back(c.substitute(images));
    return PolyMap(phi.rig(), phi.src(), psi.dst(), std::move(comps));
}

PolyMap pm_pair(const std::vector<PolyMap>& maps) {
    if (maps.empty()) throw TancatError("empty pairing");
    std::vector<Polynomial> comps;
    int dst = 0;
    for (const auto& m : maps) {
        if (m.src() != maps[0].src() || m.rig() != maps[0].rig())
            throw TancatError("pairing endpoint mismatch");
        comps.insert(comps.end(), m.components().begin(), m.components().end());
        dst += m.dst();
    }
    return PolyMap(maps[0].rig(), maps[0].src(), dst, std::move(comps));
}

PolyMap pm_add(const PolyMap& f, const PolyMap& g) {
    if (f.src() != g.src() || f.dst() != g.dst() || f.rig() != g.rig())
        throw TancatError("addition endpoint mismatch");
    std::vector<Polynomial> comps;
    for (int j = 0; j < f.dst(); ++j) comps.push_back(f.component(j).add(g.component(j)));
    return PolyMap(f.rig(), f.src(), f.dst(), std::move(comps));
}

PolyMap pm_scale(const PolyMap& f, const RigScalar& c) {
    std::vector<Polynomial> comps;
    for (const auto& p : f.components()) comps.push_back(p.scale(c));
    return PolyMap(f.rig(), f.src(), f.dst(), std::move(comps));
}

PolyMap cdc_D(const PolyMap& f) {
    const int n = f.src();
    std::vector<Polynomial> comps;
    for (const auto& c : f.components()) {
        Polynomial d = Polynomial::zero(f.rig());
        for (int i = 1; i <= n; ++i)
            d = d.add(c.partial_derivative(poly_var(i)).mul(var_poly(f.rig(), n + i)));
        comps.push_back(d);
    }
    return PolyMap(f.rig(), 2 * n, f.dst(), std::move(comps));
}

bool is_dlinear(const PolyMap& f) {
    PolyMap direction = pm_block_projection(f.rig(), 2 * f.src(), f.src() + 1, f.src());
    return cdc_D(f) == pm_compose(f, direction);
}

PolyMap tangent_T(const PolyMap& f) {
    const int n = f.src();
    auto to_point = block_shift(f.rig(), n, n);
    std::vector<Polynomial> comps;
    for (const auto& c : f.components()) {
        Polynomial d = Polynomial::zero(f.rig());
        for (int i = 1; i <= n; ++i)
            d = d.add(c.partial_derivative(poly_var(i)).substitute(to_point).mul(
                var_poly(f.rig(), i)));
        comps.push_back(d);
    }
    for (const auto& c : f.components()) comps.push_back(c.substitute(to_point));
    return PolyMap(f.rig(), 2 * n, 2 * f.dst(), std::move(comps));
}

PolyMap tangent_T2_map(const PolyMap& f) {
    const int n = f.src();
    auto to_point = block_shift(f.rig(), n, 2 * n);
    std::vector<Polynomial> comps;
    for (int block = 0; block < 2; ++block) {
        for (const auto& c : f.components()) {
            Polynomial d = Polynomial::zero(f.rig());
            for (int i = 1; i <= n; ++i)
                d = d.add(c.partial_derivative(poly_var(i)).substitute(to_point).mul(
                    var_poly(f.rig(), block * n + i)));
            comps.push_back(d);
        }
    }
    for (const auto& c : f.components()) comps.push_back(c.substitute(to_point));
    return PolyMap(f.rig(), 3 * n, 3 * f.dst(), std::move(comps));
}

TangentStructureMaps tangent_structure_maps(Rig rig, int n) {
    auto vp = [&](int i) { return var_poly(rig, i); };
    auto zero_block = [&](std::vector<Polynomial>& comps, int count) {
        for (int i = 0; i < count; ++i) comps.push_back(Polynomial::zero(rig));
    };
    auto var_block = [&](std::vector<Polynomial>& comps, int start, int count) {
        for (int i = 0; i < count; ++i) comps.push_back(vp(start + i));
    };

    std::vector<Polynomial> pc;
    var_block(pc, n + 1, n);
    PolyMap p(rig, 2 * n, n, std::move(pc));

    std::vector<Polynomial> zc;
    zero_block(zc, n);
    var_block(zc, 1, n);
    PolyMap zero(rig, n, 2 * n, std::move(zc));

    std::vector<Polynomial> sc;
    for (int i = 1; i <= n; ++i) sc.push_back(vp(i).add(vp(n + i)));
    var_block(sc, 2 * n + 1, n);
    PolyMap plus(rig, 3 * n, 2 * n, std::move(sc));

    std::vector<Polynomial> lc;
    var_block(lc, 1, n);
    zero_block(lc, 2 * n);
    var_block(lc, n + 1, n);
    PolyMap ell(rig, 2 * n, 4 * n, std::move(lc));

    std::vector<Polynomial> fc;
    var_block(fc, 1, n);
    var_block(fc, 2 * n + 1, n);
    var_block(fc, n + 1, n);
    var_block(fc, 3 * n + 1, n);
    PolyMap flip(rig, 4 * n, 4 * n, std::move(fc));

    return {std::move(p), std::move(zero), std::move(plus), std::move(ell),
            std::move(flip)};
}

PolyMap random_polymap(Rng& rng, Rig rig, int src, int dst, int max_deg, int max_terms) {
    std::vector<Polynomial> comps;
    for (int j = 0; j < dst; ++j) {
        Polynomial c = Polynomial::zero(rig);
        int terms = static_cast<int>(rng.below(max_terms + 1));
        for (int t = 0; t < terms; ++t) {
            long coeff = rig == Rig::NAT ? rng.range(1, 3)
                                         : (rng.below(2) ? rng.range(1, 3) : -rng.range(1, 3));
            Monomial m;
            if (src > 0) {
                int deg = static_cast<int>(rng.below(max_deg + 1));
                for (int d = 0; d < deg; ++d)
                    m = m.mul(Monomial::var(poly_var(static_cast<int>(rng.below(src)) + 1)));
            }
            c = c.add(Polynomial::term(RigScalar::of_int(rig, coeff), m));
        }
        comps.push_back(c);
    }
    return PolyMap(rig, src, dst, std::move(comps));
}

namespace {

RigScalar random_coefficient(Rng& rng, Rig rig) {
    if (rig == Rig::NAT) return RigScalar::of_int(rig, static_cast<long>(rng.below(4)));
    return RigScalar::of_int(rig, rng.range(-3, 3));
}

struct SampleChecker {
    int samples;
    Report& report;

    // Run body() `samples` times; record one report item. body returns an
    // empty string on success, a witness on failure.
    template <typename F>
    void run(const std::string& name, F body) {
        for (int s = 0; s < samples; ++s) {
            std::string witness = body(s);
            if (!witness.empty()) {
                report.add(name, false, "sample " + std::to_string(s) + ": " + witness);
                return;
            }
        }
        report.add(name, true);
    }
};

}  // namespace

Report check_cd_axioms(Rig rig, int samples, std::uint64_t seed) {
    Rng rng(seed);
    Report report;
    SampleChecker check{samples, report};

    check.run("CD1", [&](int) -> std::string {
        int n = static_cast<int>(rng.below(4)), m = static_cast<int>(rng.below(4));
        PolyMap f = random_polymap(rng, rig, n, m, 4, 3);
        PolyMap g = random_polymap(rng, rig, n, m, 4, 3);
        RigScalar a = random_coefficient(rng, rig), b = random_coefficient(rng, rig);
        PolyMap lhs = cdc_D(pm_add(pm_scale(f, a), pm_scale(g, b)));
        PolyMap rhs = pm_add(pm_scale(cdc_D(f), a), pm_scale(cdc_D(g), b));
        if (lhs == rhs) return "";
        return "f=" + f.str() + " g=" + g.str() + " a=" + a.str() + " b=" + b.str();
    });

    check.run("CD2", [&](int) -> std::string {
        int n = static_cast<int>(rng.below(4)), m = static_cast<int>(rng.below(4));
        int q = static_cast<int>(rng.below(4));
        PolyMap f = random_polymap(rng, rig, n, m, 4, 3);
        PolyMap g = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap h = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap k = random_polymap(rng, rig, q, n, 3, 3);
        RigScalar a = random_coefficient(rng, rig), b = random_coefficient(rng, rig);
        PolyMap df = cdc_D(f);
        PolyMap lhs = pm_compose(df, pm_pair({g, pm_add(pm_scale(h, a), pm_scale(k, b))}));
        PolyMap rhs = pm_add(pm_scale(pm_compose(df, pm_pair({g, h})), a),
                             pm_scale(pm_compose(df, pm_pair({g, k})), b));
        if (lhs == rhs) return "";
        return "f=" + f.str() + " g=" + g.str() + " h=" + h.str() + " k=" + k.str() +
               " a=" + a.str() + " b=" + b.str();
    });

    check.run("CD3", [&](int) -> std::string {
        int n = 1 + static_cast<int>(rng.below(3));
        if (cdc_D(pm_identity(rig, n)) != pm_block_projection(rig, 2 * n, n + 1, n))
            return "identity at arity " + std::to_string(n);
        int i = 1 + static_cast<int>(rng.below(n));
        PolyMap proj = pm_block_projection(rig, n, i, 1);
        if (cdc_D(proj) != pm_block_projection(rig, 2 * n, n + i, 1))
            return "projection " + std::to_string(i) + " at arity " + std::to_string(n);
        return "";
    });

    check.run("CD4", [&](int) -> std::string {
        int n = static_cast<int>(rng.below(4));
        int m1 = static_cast<int>(rng.below(4)), m2 = static_cast<int>(rng.below(4));
        PolyMap f = random_polymap(rng, rig, n, m1, 4, 3);
        PolyMap g = random_polymap(rng, rig, n, m2, 4, 3);
        if (cdc_D(pm_pair({f, g})) == pm_pair({cdc_D(f), cdc_D(g)})) return "";
        return "f=" + f.str() + " g=" + g.str();
    });

    check.run("CD5", [&](int) -> std::string {
        int n = static_cast<int>(rng.below(4)), p = static_cast<int>(rng.below(4));
        int m = static_cast<int>(rng.below(4));
        PolyMap f = random_polymap(rng, rig, n, p, 3, 3);
        PolyMap g = random_polymap(rng, rig, p, m, 3, 3);
        PolyMap lhs = cdc_D(pm_compose(g, f));
        PolyMap point = pm_block_projection(rig, 2 * n, 1, n);
        PolyMap rhs = pm_compose(cdc_D(g), pm_pair({pm_compose(f, point), cdc_D(f)}));
        if (lhs == rhs) return "";
        return "f=" + f.str() + " g=" + g.str();
    });

    check.run("CD6", [&](int) -> std::string {
        int n = static_cast<int>(rng.below(4)), m = static_cast<int>(rng.below(4));
        int q = static_cast<int>(rng.below(4));
        PolyMap f = random_polymap(rng, rig, n, m, 4, 3);
        PolyMap g = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap h = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap k = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap zero = pm_zero_map(rig, q, n);
        PolyMap lhs = pm_compose(cdc_D(cdc_D(f)), pm_pair({g, h, zero, k}));
        PolyMap rhs = pm_compose(cdc_D(f), pm_pair({g, k}));
        if (lhs == rhs) return "";
        return "f=" + f.str() + " g=" + g.str() + " h=" + h.str() + " k=" + k.str();
    });

    check.run("CD7", [&](int) -> std::string {
        int n = static_cast<int>(rng.below(4)), m = static_cast<int>(rng.below(4));
        int q = static_cast<int>(rng.below(4));
        PolyMap f = random_polymap(rng, rig, n, m, 4, 3);
        PolyMap g = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap h = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap k = random_polymap(rng, rig, q, n, 3, 3);
        PolyMap zero = pm_zero_map(rig, q, n);
        PolyMap ddf = cdc_D(cdc_D(f));
        PolyMap lhs = pm_compose(ddf, pm_pair({g, h, k, zero}));
        PolyMap rhs = pm_compose(ddf, pm_pair({g, k, h, zero}));
        if (lhs == rhs) return "";
        return "f=" + f.str() + " g=" + g.str() + " h=" + h.str() + " k=" + k.str();
    });

    return report;
}

Report check_tangent_axioms(Rig rig, int n, int samples, std::uint64_t seed) {
    Rng rng(seed);
    Report report;
    TangentStructureMaps S = tangent_structure_maps(rig, n);
    TangentStructureMaps ST = tangent_structure_maps(rig, 2 * n);

    auto vp = [&](int i) { return Polynomial::variable(rig, poly_var(i)); };
    auto build = [&](int src, const std::vector<std::pair<int, int>>& blocks,
                     const std::vector<int>& zeros_before) {
        // blocks: (start, count) variable blocks; zeros_before[i] zero
        // components inserted before block i (and after the last).
        std::vector<Polynomial> comps;
        for (size_t b = 0; b < blocks.size(); ++b) {
            for (int z = 0; z < zeros_before[b]; ++z) comps.push_back(Polynomial::zero(rig));
            for (int i = 0; i < blocks[b].second; ++i) comps.push_back(vp(blocks[b].first + i));
        }
        for (int z = 0; z < zeros_before[blocks.size()]; ++z)
            comps.push_back(Polynomial::zero(rig));
        int dst = static_cast<int>(comps.size());
        return PolyMap(rig, src, dst, std::move(comps));
    };

    auto add_eq = [&](const std::string& name, const PolyMap& lhs, const PolyMap& rhs) {
        report.add(name, lhs == rhs, "lhs=" + lhs.str() + " rhs=" + rhs.str());
    };

    // Axiom 2: (p, zero, plus) is a commutative monoid in the slice.
    add_eq("Axiom 2: section", pm_compose(S.p, S.zero), pm_identity(rig, n));
    PolyMap left_inj = build(2 * n, {{1, n}, {n + 1, n}}, {n, 0, 0});   // (0; v; a)
    PolyMap right_inj = build(2 * n, {{1, n}, {n + 1, n}}, {0, n, 0});  // (v; 0; a)
    add_eq("Axiom 2: left unit", pm_compose(S.plus, left_inj), pm_identity(rig, 2 * n));
    add_eq("Axiom 2: right unit", pm_compose(S.plus, right_inj), pm_identity(rig, 2 * n));
    PolyMap swap_fib = build(3 * n, {{n + 1, n}, {1, n}, {2 * n + 1, n}}, {0, 0, 0, 0});
    add_eq("Axiom 2: commutativity", pm_compose(S.plus, swap_fib), S.plus);
    {
        std::vector<Polynomial> c12, c23;
        for (int i = 1; i <= n; ++i) c12.push_back(vp(i).add(vp(n + i)));
        for (int i = 2 * n + 1; i <= 4 * n; ++i) c12.push_back(vp(i));
        for (int i = 1; i <= n; ++i) c23.push_back(vp(i));
        for (int i = 1; i <= n; ++i) c23.push_back(vp(n + i).add(vp(2 * n + i)));
        for (int i = 3 * n + 1; i <= 4 * n; ++i) c23.push_back(vp(i));
        PolyMap plus12(rig, 4 * n, 3 * n, std::move(c12));
        PolyMap plus23(rig, 4 * n, 3 * n, std::move(c23));
        add_eq("Axiom 2: associativity", pm_compose(S.plus, plus12),
               pm_compose(S.plus, plus23));
    }
    add_eq("Axiom 2: bundle", pm_compose(S.p, S.plus),
           pm_block_projection(rig, 3 * n, 2 * n + 1, n));

    // Axiom 3: the lift is an additive bundle morphism.
    add_eq("Axiom 3: bundle square", pm_compose(tangent_T(S.p), S.ell),
           pm_compose(S.zero, S.p));
    add_eq("Axiom 3: zero", pm_compose(S.ell, S.zero),
           pm_compose(tangent_T(S.zero), S.zero));
    // Joint lift of both fibers into T(T2) = (direction 3n; point 3n).
    PolyMap lambda_ell = build(3 * n, {{1, n}, {n + 1, n}, {2 * n + 1, n}}, {0, 0, 3 * n, 0});
    add_eq("Axiom 3: additivity", pm_compose(S.ell, S.plus),
           pm_compose(tangent_T(S.plus), lambda_ell));

    // Axiom 4: the flip is an additive bundle morphism.
    add_eq("Axiom 4: bundle square", pm_compose(ST.p, S.flip), tangent_T(S.p));
    add_eq("Axiom 4: zero", pm_compose(S.flip, tangent_T(S.zero)), ST.zero);
    // Interleaving T(T2) -> T2(T): (F1,F2,F3; P1,P2,P3) -> (F1,P1; F2,P2; F3,P3).
    PolyMap kappa = build(6 * n,
                          {{1, n}, {3 * n + 1, n}, {n + 1, n}, {4 * n + 1, n},
                           {2 * n + 1, n}, {5 * n + 1, n}},
                          {0, 0, 0, 0, 0, 0, 0});
    add_eq("Axiom 4: additivity", pm_compose(S.flip, tangent_T(S.plus)),
           pm_compose(ST.plus, kappa));

    // Axiom 5: lift/flip coherences.
    add_eq("Axiom 5: c^2=id", pm_compose(S.flip, S.flip), pm_identity(rig, 4 * n));
    add_eq("Axiom 5: cl=l", pm_compose(S.flip, S.ell), S.ell);
    add_eq("Axiom 5: coassociativity", pm_compose(ST.ell, S.ell),
           pm_compose(tangent_T(S.ell), S.ell));
    add_eq("Axiom 5: hexagon",
           pm_compose(ST.flip, pm_compose(tangent_T(S.flip), ST.flip)),
           pm_compose(tangent_T(S.flip), pm_compose(ST.flip, tangent_T(S.flip))));
    add_eq("Axiom 5: l-c square",
           pm_compose(ST.flip, pm_compose(tangent_T(S.flip), ST.ell)),
           pm_compose(tangent_T(S.ell), S.flip));

    // Axiom 6: the vertical lift fork commutes.
    PolyMap mu = build(3 * n, {{1, n}, {n + 1, n}, {2 * n + 1, n}}, {0, n, 0, 0});
    PolyMap lambda_mu = build(3 * n, {{1, n}, {n + 1, n}, {2 * n + 1, n}}, {0, 3 * n, 0, 0});
    add_eq("Axiom 6: lift construction", mu, pm_compose(tangent_T(S.plus), lambda_mu));
    add_eq("Axiom 6: fork", pm_compose(tangent_T(S.p), mu),
           pm_compose(S.zero, pm_compose(S.p, pm_compose(ST.p, mu))));

    // Naturality of the five families against random maps n -> m.
    SampleChecker check{samples, report};
    auto natural = [&](const std::string& name, auto lhs_rhs) {
        check.run("naturality: " + name, [&](int) -> std::string {
            int m = static_cast<int>(rng.below(4));
            PolyMap f = random_polymap(rng, rig, n, m, 4, 3);
            auto [lhs, rhs] = lhs_rhs(f, tangent_structure_maps(rig, m));
            if (lhs == rhs) return "";
            return "f=" + f.str();
        });
    };
    natural("p", [&](const PolyMap& f, const TangentStructureMaps& M) {
        return std::make_pair(pm_compose(M.p, tangent_T(f)), pm_compose(f, S.p));
    });
    natural("zero", [&](const PolyMap& f, const TangentStructureMaps& M) {
        return std::make_pair(pm_compose(M.zero, f), pm_compose(tangent_T(f), S.zero));
    });
    natural("plus", [&](const PolyMap& f, const TangentStructureMaps& M) {
        return std::make_pair(pm_compose(M.plus, tangent_T2_map(f)),
                              pm_compose(tangent_T(f), S.plus));
    });
    natural("l", [&](const PolyMap& f, const TangentStructureMaps& M) {
        return std::make_pair(pm_compose(M.ell, tangent_T(f)),
                              pm_compose(tangent_T(tangent_T(f)), S.ell));
    });
    natural("c", [&](const PolyMap& f, const TangentStructureMaps& M) {
        return std::make_pair(pm_compose(M.flip, tangent_T(tangent_T(f))),
                              pm_compose(tangent_T(tangent_T(f)), S.flip));
    });

    return report;
}

}  // namespace tancat
