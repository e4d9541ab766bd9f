#pragma once

#include "tancat/polynomial.hpp"
#include "tancat/report.hpp"
#include "tancat/rng.hpp"

#include <string>
#include <vector>

namespace tancat {

// Canonical variable of position i (1-based): "x1", "x2", ...
std::string poly_var(int i);

// Morphism of the polynomial category: an arity-src to arity-dst map given
// by dst polynomial components in the canonical variables x1..x{src}.
class PolyMap {
public:
    PolyMap(Rig rig, int src, int dst, std::vector<Polynomial> components);

    Rig rig() const { return rig_; }
    int src() const { return src_; }
    int dst() const { return dst_; }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(int j) const { return components_[j]; }  // 0-based

    bool operator==(const PolyMap& o) const {
        return rig_ == o.rig_ && src_ == o.src_ && dst_ == o.dst_ &&
               components_ == o.components_;
    }
    bool operator!=(const PolyMap& o) const { return !(*this == o); }

    // "(c1, c2, ...)" with canonical variable order.
    std::string str() const;

private:
    Rig rig_;
    int src_;
    int dst_;
    std::vector<Polynomial> components_;
};

PolyMap pm_identity(Rig rig, int n);
// Components x{start}..x{start+count-1} as a map src -> count (start 1-based).
PolyMap pm_block_projection(Rig rig, int src, int start, int count);
PolyMap pm_zero_map(Rig rig, int src, int dst);
// Composite "psi after phi": substitute phi's components into psi's.
PolyMap pm_compose(const PolyMap& psi, const PolyMap& phi);
// Pairing: concatenate component lists of maps sharing a source.
PolyMap pm_pair(const std::vector<PolyMap>& maps);
PolyMap pm_add(const PolyMap& f, const PolyMap& g);
PolyMap pm_scale(const PolyMap& f, const RigScalar& c);

// Differential combinator. For f: n -> m the result is 2n -> m; the first
// block x1..xn is the point, the second block x{n+1}..x{2n} is the
// direction, and component j is the directional derivative of f_j.
PolyMap cdc_D(const PolyMap& f);

// f is D-linear iff D(f) = f on the direction block alone; equivalently
// every component is homogeneous linear with no constant term.
bool is_dlinear(const PolyMap& f);

// Tangent functor on maps: 2n -> 2m with blocks (tangent; point). The
// tangent output is the derivative taken at the point block applied to the
// tangent block; the point output is f of the point block.
PolyMap tangent_T(const PolyMap& f);

// Action on the realized pullback T2 = (fiber1; fiber2; point): 3n -> 3m.
PolyMap tangent_T2_map(const PolyMap& f);

// The five structure maps at arity n, in the (tangent; point) convention:
//   p:    2n -> n    projection to the point block
//   zero: n  -> 2n   a |-> (0; a)
//   plus: 3n -> 2n   (v; w; a) |-> (v+w; a)
//   ell:  2n -> 4n   (v; a) |-> (v; 0; 0; a)
//   flip: 4n -> 4n   (s; t; v; a) |-> (s; v; t; a)
struct TangentStructureMaps {
    PolyMap p;
    PolyMap zero;
    PolyMap plus;
    PolyMap ell;
    PolyMap flip;
};

TangentStructureMaps tangent_structure_maps(Rig rig, int n);

// Seeded random map for the axiom checkers: arities fixed by the caller,
// degree <= max_deg, small coefficients (nonnegative over N).
PolyMap random_polymap(Rng& rng, Rig rig, int src, int dst, int max_deg, int max_terms);

// CD1..CD7 on seeded random instances; every item must pass for the
// polynomial category.
Report check_cd_axioms(Rig rig, int samples, std::uint64_t seed);

// Equational tangent-structure checks at arity n (bundle monoid laws, the
// lift and flip squares, the five flip/lift coherences, the fork) plus
// naturality of all five structure families against seeded random maps.
Report check_tangent_axioms(Rig rig, int n, int samples, std::uint64_t seed);

}  // namespace tancat
