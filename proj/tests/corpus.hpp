#pragma once

// Deterministic random-instance builders and fixed algebra corpora shared by
// the unit suites and the acceptance binary.

#include "oracles.hpp"
#include "tancat/ind.hpp"
#include "tancat/parser.hpp"
#include "tancat/weil.hpp"

#include <random>

namespace testgen {

using tancat::AlgebraHom;
using tancat::BaseKind;
using tancat::FiniteCategory;
using tancat::IndObject;
using tancat::PolyMap;
using tancat::PresentedAlgebra;
using tancat::WeilObject;

inline PresentedAlgebra rational_algebra(std::vector<std::string> gens,
                                         std::vector<std::string> rels) {
    std::vector<Polynomial> parsed;
    for (const auto& r : rels) parsed.push_back(tancat::parse_poly(r, Rig::RAT));
    return PresentedAlgebra(Rig::RAT, std::move(gens), std::move(parsed));
}

// The fixed rational corpus the tangent-structure checks run over: a
// polynomial line, truncated lines of order 2..5, the cusp, crossed axes,
// and three rationalized nilpotent coordinate rings.
inline std::vector<PresentedAlgebra> zariski_corpus() {
    std::vector<PresentedAlgebra> out;
    out.push_back(rational_algebra({"t"}, {}));
    for (int n = 2; n <= 5; ++n)
        out.push_back(rational_algebra({"t"}, {"t^" + std::to_string(n)}));
    out.push_back(rational_algebra({"x", "y"}, {"y^2 - x^3"}));
    out.push_back(rational_algebra({"x", "y"}, {"x*y"}));
    out.push_back(tancat::convert_algebra(tancat::weil_generate(1).realized(), Rig::RAT));
    out.push_back(tancat::convert_algebra(tancat::weil_generate(2).realized(), Rig::RAT));
    out.push_back(tancat::convert_algebra(
        tancat::weil_tensor(tancat::weil_generate(1), tancat::weil_generate(1)).realized(),
        Rig::RAT));
    return out;
}

inline WeilObject random_weil_object(std::mt19937_64& rng, int max_blocks = 3,
                                     int max_block = 3) {
    std::vector<int> blocks;
    int nb = static_cast<int>(draw(rng, max_blocks + 1));
    for (int i = 0; i < nb; ++i)
        blocks.push_back(1 + static_cast<int>(draw(rng, max_block)));
    return WeilObject(blocks);
}

// A random morphism that is valid by construction: each source block maps
// into a single target block (all its generators become linear combinations
// of that block's generators, or 0 when the target is the unit). Products
// of same-source-block generators then land on same-target-block products,
// which all vanish, so every quadratic relation is preserved.
inline AlgebraHom random_weil_hom(std::mt19937_64& rng, const WeilObject& src,
                                  const WeilObject& dst) {
    const auto& sgens = src.realized().generators();
    const auto& dgens = dst.realized().generators();
    std::vector<std::vector<std::string>> blocks;
    size_t pos = 0;
    for (int b : dst.blocks()) {
        blocks.emplace_back(dgens.begin() + pos, dgens.begin() + pos + b);
        pos += b;
    }
    std::map<std::string, Polynomial> images;
    size_t spos = 0;
    for (int sb : src.blocks()) {
        const std::vector<std::string>* block =
            blocks.empty() ? nullptr : &blocks[draw(rng, blocks.size())];
        for (int k = 0; k < sb; ++k) {
            Polynomial img = Polynomial::zero(Rig::NAT);
            if (block) {
                for (const auto& t : *block) {
                    long c = static_cast<long>(draw(rng, 4));
                    if (c)
                        img = img.add(Polynomial::variable(Rig::NAT, t)
                                          .scale(tancat::RigScalar::of_int(Rig::NAT, c)));
                }
            }
            images.emplace(sgens[spos + k], img);
        }
        spos += sb;
    }
    return AlgebraHom(src.realized(), dst.realized(), std::move(images));
}

inline PolyMap poly_map(Rig rig, int src, const std::vector<std::string>& comps) {
    std::vector<Polynomial> ps;
    for (const auto& c : comps) ps.push_back(tancat::parse_poly(c, rig));
    int dst = static_cast<int>(ps.size());
    return PolyMap(rig, src, dst, std::move(ps));
}

inline IndObject constant_apoly(Rig rig, int arity) {
    auto idx = FiniteCategory::from_quiver({"*"}, {});
    return IndObject::apoly(std::move(idx), rig, {{"*", arity}}, {});
}

// Single arrow f between two levels, arities read off the map.
inline IndObject two_apoly(const PolyMap& f) {
    auto idx = FiniteCategory::from_quiver({"0", "1"}, {{"f", "0", "1"}});
    return IndObject::apoly(std::move(idx), f.rig(), {{"0", f.src()}, {"1", f.dst()}},
                            {{"f", f}});
}

inline IndObject chain_apoly(const PolyMap& f, const PolyMap& g) {
    auto idx =
        FiniteCategory::from_quiver({"0", "1", "2"}, {{"f", "0", "1"}, {"g", "1", "2"}});
    return IndObject::apoly(std::move(idx), f.rig(),
                            {{"0", f.src()}, {"1", f.dst()}, {"2", g.dst()}},
                            {{"f", f}, {"g", g}});
}

inline IndObject cospan_apoly() {
    auto idx = FiniteCategory::from_quiver({"a", "b", "c"},
                                           {{"f", "a", "c"}, {"g", "b", "c"}});
    return IndObject::apoly(std::move(idx), Rig::RAT, {{"a", 1}, {"b", 1}, {"c", 1}},
                            {{"f", poly_map(Rig::RAT, 1, {"x1"})},
                             {"g", poly_map(Rig::RAT, 1, {"2*x1"})}});
}

// Parallel pair a, b equalized by w through the relation a;w = b;w. The
// composites agree on the nose because the target level has arity 0.
inline IndObject equalizer_apoly() {
    auto idx = FiniteCategory::from_quiver(
        {"i", "j", "k"}, {{"a", "i", "j"}, {"b", "i", "j"}, {"w", "j", "k"}},
        {{{"a", "w"}, {"b", "w"}}});
    return IndObject::apoly(std::move(idx), Rig::RAT, {{"i", 1}, {"j", 1}, {"k", 0}},
                            {{"a", poly_map(Rig::RAT, 1, {"x1"})},
                             {"b", poly_map(Rig::RAT, 1, {"2*x1"})},
                             {"w", PolyMap(Rig::RAT, 1, 0, {})}});
}

inline IndObject constant_alg() {
    auto idx = FiniteCategory::from_quiver({"*"}, {});
    return IndObject::algebraic(BaseKind::ALG, std::move(idx),
                                {{"*", rational_algebra({"t"}, {"t^2"})}}, {});
}

// Covariant algebra chain: the truncation hom Q[t]/(t^3) -> Q[t]/(t^2).
inline IndObject truncation_alg_chain() {
    auto idx = FiniteCategory::from_quiver({"0", "1"}, {{"u", "0", "1"}});
    PresentedAlgebra b3 = rational_algebra({"t"}, {"t^3"});
    PresentedAlgebra b2 = rational_algebra({"t"}, {"t^2"});
    std::map<std::string, Polynomial> img;
    img.emplace("t", tancat::parse_poly("t", Rig::RAT));
    AlgebraHom u(b3, b2, std::move(img));
    return IndObject::algebraic(BaseKind::ALG, std::move(idx), {{"0", b3}, {"1", b2}},
                                {{"u", u}});
}

// The fixed diagram corpus the strictness and axiom sweeps run over:
// constants at both arities, linear and nonlinear single arrows, a chain,
// a natural-coefficient arrow, a cospan, an equalized parallel pair, a
// formal-scheme tower, and a constant algebra diagram.
inline std::vector<IndObject> ind_corpus() {
    std::vector<IndObject> out;
    out.push_back(constant_apoly(Rig::RAT, 1));
    out.push_back(constant_apoly(Rig::RAT, 0));
    out.push_back(two_apoly(poly_map(Rig::RAT, 2, {"x1 + 2*x2", "x2"})));
    out.push_back(two_apoly(poly_map(Rig::RAT, 1, {"x1^2"})));
    out.push_back(chain_apoly(poly_map(Rig::RAT, 1, {"x1", "2*x1"}),
                              poly_map(Rig::RAT, 2, {"x1 + 3*x2"})));
    out.push_back(two_apoly(poly_map(Rig::NAT, 2, {"x1*x2", "x2"})));
    out.push_back(cospan_apoly());
    out.push_back(equalizer_apoly());
    out.push_back(tancat::formal_spf(3).scheme);
    out.push_back(constant_alg());
    return out;
}

}  // namespace testgen
