#pragma once

#include "tancat/algebra.hpp"
#include "tancat/report.hpp"

namespace tancat {

// Deterministic jet-variable naming for one generator set. First jets get a
// prefix (normally "d_"), the second-level derivation gets a second prefix
// (normally "e_"), each chosen as the first of d_, e_, f_, g_, h_ that
// collides with nothing already present. Prefixing is injective, so the
// naming round-trips.
class JetNaming {
public:
    explicit JetNaming(std::vector<std::string> base_gens);

    const std::vector<std::string>& base() const { return base_; }
    const std::string& first_prefix() const { return first_; }
    const std::string& second_prefix() const { return second_; }

    std::string first_jet(const std::string& g) const;
    std::string second_jet(const std::string& g) const;
    std::string second_first_jet(const std::string& g) const;

    bool is_base(const std::string& v) const;
    bool is_first_jet(const std::string& v) const;

private:
    std::vector<std::string> base_;
    std::string first_;
    std::string second_;
};

// Tangent presentation of a base algebra: generators extended by first jets,
// relations extended by their total differentials.
struct TangentAlgebra {
    PresentedAlgebra base;
    PresentedAlgebra total;
    JetNaming naming;
};

// level 1: sum over base variables v of (df/dv) * first_jet(v).
// level 2: the second-level derivation, treating first jets as independent
// variables; base and first-jet variables both pick up the second prefix.
Polynomial total_differential(const Polynomial& f, const JetNaming& naming, int level);

TangentAlgebra tangent_algebra(const PresentedAlgebra& b, bool truncate_jets = false);

// Generators x, d_x, e_x, e_d_x with relations f, d(f), e-differentials of
// both; equals tangent_algebra applied twice.
PresentedAlgebra second_tangent_algebra(const PresentedAlgebra& b, bool truncate_jets = false);

// Functor action on homs: base generators map through phi, first jets map to
// the total differential of the image in the target's jet names.
AlgebraHom tangent_hom(const AlgebraHom& phi, bool truncate_jets = false);

// k-fold fibered tangent power: one jet family per slot, suffixed _1.._k.
// For k=2 (untruncated) this is exactly tensor(T, T, base generators).
PresentedAlgebra tangent_power(const PresentedAlgebra& b, int k, bool truncate_jets = false);
AlgebraHom tangent_power_hom(const AlgebraHom& phi, int k, bool truncate_jets = false);

// The five generating ring maps of the tangent structure, dual to
// projection, zero section, fiber addition, vertical lift, and flip.
struct ZariskiStructureMaps {
    AlgebraHom q;      // base -> tangent
    AlgebraHom zeta;   // tangent -> base, jets to zero
    AlgebraHom add;    // tangent -> two-slot tangent power
    AlgebraHom v;      // second tangent -> tangent
    AlgebraHom gamma;  // second tangent -> second tangent, swaps jet levels
};

// Throws if any of the five maps fails to be well-defined.
ZariskiStructureMaps structure_maps(const PresentedAlgebra& b, bool truncate_jets = false);

// Full axiom suite as report items: well-definedness of the five maps, the
// additive bundle laws, the lift and flip coherences, the vertical lift
// fork, and naturality squares against the supplied homs out of b.
Report check_zariski_axioms(const PresentedAlgebra& b,
                            const std::vector<AlgebraHom>& test_homs = {},
                            bool truncate_jets = false);

}  // namespace tancat
