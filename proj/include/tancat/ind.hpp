#pragma once

#include "tancat/algebra.hpp"
#include "tancat/cdc.hpp"
#include "tancat/report.hpp"
#include "tancat/zariski.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tancat {

struct QuiverArrow {
    std::string name;
    std::string src;
    std::string dst;

    bool operator==(const QuiverArrow&) const = default;
};

// Two parallel composable arrow-name sequences declared equal, in
// diagrammatic order; an empty sequence is the identity path.
using PathRelation = std::pair<std::vector<std::string>, std::vector<std::string>>;

// Finite category presented by a quiver and path relations. Morphisms are
// the rewrite normal forms of arrow paths (longest relation side rewrites
// to the shortest); construction enumerates all of them, builds the full
// composition table and validates closure and associativity, failing above
// `cap` morphisms when the relations leave the category infinite.
class FiniteCategory {
public:
    struct Morphism {
        std::string src;
        std::string dst;
        std::vector<std::string> path;  // arrow names; empty = identity at src

        std::string label() const;
        bool operator==(const Morphism&) const = default;
    };

    static FiniteCategory from_quiver(std::vector<std::string> objects,
                                      std::vector<QuiverArrow> arrows,
                                      std::vector<PathRelation> relations = {},
                                      std::size_t cap = 256);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<QuiverArrow>& arrows() const { return arrows_; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    // The rewrite rules as path relations (longest/lex-larger side first);
    // feeding them back to from_quiver rebuilds this category.
    const std::vector<PathRelation>& relations() const { return rules_; }

    bool has_object(const std::string& name) const;
    const QuiverArrow& arrow(const std::string& name) const;

    // Morphism indices into morphisms().
    int identity_index(const std::string& obj) const;
    int normalize(const std::string& src, const std::vector<std::string>& path) const;
    // Composite "after of first" (apply `first`, then `after`); -1 never
    // happens: incomposable arguments throw.
    int compose(int after, int first) const;

    bool operator==(const FiniteCategory& o) const {
        return objects_ == o.objects_ && arrows_ == o.arrows_ &&
               morphisms_ == o.morphisms_ && table_ == o.table_;
    }
    bool operator!=(const FiniteCategory& o) const { return !(*this == o); }

    // Empty category; from_quiver builds validated instances.
    FiniteCategory() = default;

private:
    std::vector<std::string> objects_;
    std::vector<QuiverArrow> arrows_;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rules_;
    std::vector<Morphism> morphisms_;
    // table_[f][g] = index of g after f, -1 when not composable.
    std::vector<std::vector<int>> table_;

    std::vector<std::string> reduce_path(std::vector<std::string> path) const;
    std::string trace_dst(const std::string& src, const std::vector<std::string>& path) const;
};

// Nonempty, every object pair admits a cospan, every parallel morphism
// pair admits an equalizing post-composition; each decided by enumeration.
bool check_filtered(const FiniteCategory& c);

enum class BaseKind { APOLY, ALG, ALG_OP };

// Diagram over a finite filtered index category: the artifact's finite
// presentation of an ind-object. Arrow images generate the functor; the
// factories verify that every declared path relation maps to equal base
// morphisms. ALG diagrams are covariant algebra diagrams; ALG_OP diagrams
// are scheme diagrams whose arrow a: i -> j stores the underlying algebra
// map objects[j] -> objects[i].
class IndObject {
public:
    static IndObject apoly(FiniteCategory index, Rig rig,
                           std::map<std::string, int> arities,
                           std::map<std::string, PolyMap> arrow_maps);
    static IndObject algebraic(BaseKind kind, FiniteCategory index,
                               std::map<std::string, PresentedAlgebra> algebras,
                               std::map<std::string, AlgebraHom> arrow_homs);

    BaseKind base() const { return base_; }
    const FiniteCategory& index() const { return index_; }
    Rig rig() const { return rig_; }

    int arity_at(const std::string& obj) const;
    const PresentedAlgebra& algebra_at(const std::string& obj) const;
    const std::map<std::string, int>& arities() const { return arities_; }
    const std::map<std::string, PresentedAlgebra>& algebras() const { return algebras_; }
    const std::map<std::string, PolyMap>& poly_arrows() const { return poly_arrows_; }
    const std::map<std::string, AlgebraHom>& hom_arrows() const { return hom_arrows_; }

    // Functor value on a category morphism; for ALG_OP this is the
    // composite in the algebra direction.
    PolyMap poly_transition(int mor) const;
    AlgebraHom hom_transition(int mor) const;

    bool operator==(const IndObject& o) const;
    bool operator!=(const IndObject& o) const { return !(*this == o); }

    // Empty diagram; the factories build validated instances.
    IndObject() = default;

private:
    BaseKind base_ = BaseKind::APOLY;
    FiniteCategory index_;
    Rig rig_ = Rig::RAT;
    std::map<std::string, int> arities_;
    std::map<std::string, PresentedAlgebra> algebras_;
    std::map<std::string, PolyMap> poly_arrows_;
    std::map<std::string, AlgebraHom> hom_arrows_;
};

// Same-index morphism of diagrams: one base morphism per level. For
// ALG_OP diagrams the stored map at level i runs in the algebra direction,
// ring(target_i) -> ring(source_i).
class IndMorphismSame {
public:
    static IndMorphismSame of_polys(IndObject source, IndObject target,
                                    std::map<std::string, PolyMap> family);
    static IndMorphismSame of_homs(IndObject source, IndObject target,
                                   std::map<std::string, AlgebraHom> family);

    const IndObject& source() const { return source_; }
    const IndObject& target() const { return target_; }
    const PolyMap& poly_at(const std::string& obj) const;
    const AlgebraHom& hom_at(const std::string& obj) const;

    bool operator==(const IndMorphismSame& o) const;
    bool operator!=(const IndMorphismSame& o) const { return !(*this == o); }

private:
    IndMorphismSame() = default;

    IndObject source_;
    IndObject target_;
    std::map<std::string, PolyMap> poly_family_;
    std::map<std::string, AlgebraHom> hom_family_;
};

IndMorphismSame ind_identity(const IndObject& x);

// General morphism between diagrams over possibly different indices: one
// leg per source level, landing at some target level. Construction
// normalizes every leg to its lexicographically least pushforward along
// the target's transitions so printed representatives are canonical; this
// is one admissible representative choice, not a quotient of the hom-set.
class IndMorphismGeneral {
public:
    struct Leg {
        std::string at;  // target index object
        std::optional<PolyMap> poly;
        std::optional<AlgebraHom> hom;
    };

    static IndMorphismGeneral of(IndObject source, IndObject target,
                                 std::map<std::string, Leg> legs);

    const IndObject& source() const { return source_; }
    const IndObject& target() const { return target_; }
    const Leg& leg_at(const std::string& obj) const;

    // Syntactic equality of the normalized representatives.
    bool operator==(const IndMorphismGeneral& o) const;
    bool operator!=(const IndMorphismGeneral& o) const { return !(*this == o); }

private:
    IndMorphismGeneral() = default;

    IndObject source_;
    IndObject target_;
    std::map<std::string, Leg> legs_;
};

IndMorphismGeneral generalize(const IndMorphismSame& rho);

// True iff two maps out of one base object into levels j and jp of y hit a
// common level: some transitions u: j -> k, u': jp -> k of y make the
// composites equal in the base.
bool colim_hom_equiv(const std::string& j, const PolyMap& f, const std::string& jp,
                     const PolyMap& fp, const IndObject& y);
bool colim_hom_equiv(const std::string& j, const AlgebraHom& f, const std::string& jp,
                     const AlgebraHom& fp, const IndObject& y);

// Naturality of a same-index family against every transition arrow; empty
// witness means valid, otherwise the offending arrow name.
std::string ind_naturality_witness(const IndMorphismSame& rho);
bool ind_morphism_valid(const IndMorphismSame& rho);
// Leg coherence of a general morphism across every source transition.
bool ind_morphism_valid(const IndMorphismGeneral& rho);

IndMorphismSame ind_compose(const IndMorphismSame& sigma, const IndMorphismSame& rho);
IndMorphismGeneral ind_compose(const IndMorphismGeneral& sigma, const IndMorphismGeneral& rho);
IndMorphismGeneral ind_compose(const IndMorphismGeneral& sigma, const IndMorphismSame& rho);
IndMorphismGeneral ind_compose(const IndMorphismSame& sigma, const IndMorphismGeneral& rho);

// Hom-set equality: legwise colimit equivalence between morphisms with
// equal endpoints.
bool ind_general_equal(const IndMorphismGeneral& a, const IndMorphismGeneral& b);

// Registered base endofunctors: "id", "T", and the literal composite "TT".
IndObject ind_apply_functor(const std::string& tag, const IndObject& x);
IndMorphismSame ind_apply_functor(const std::string& tag, const IndMorphismSame& rho);

// Registered tangent-structure families: "p", "zero", "plus", "ell",
// "flip". Polynomial diagrams get the arity-level maps; algebra diagrams
// get the ring-side mates (q, zeta, add, v, gamma), with scheme-side
// endpoints for ALG_OP and ring-side endpoints for ALG.
IndMorphismSame ind_apply_nat(const std::string& tag, const IndObject& x);

// Levelwise tangent-bundle pullback: both arguments must be the canonical
// projection family of one diagram; anything else is unsupported.
IndObject ind_pullback(const IndMorphismSame& f, const IndMorphismSame& g);

struct DiffObjectResult {
    bool is_differential = false;
    std::string witness;  // offending arrow when not
};

// A polynomial diagram presents a differential object iff every arrow
// image is linear in the differential sense.
DiffObjectResult diff_object_check(const IndObject& x);

struct FormalSpf {
    IndObject scheme;
    IndObject tangent;
};

// The truncation chain 1 -> 2 -> ... -> n of Q[t]/(t^k) as a scheme
// diagram, together with its levelwise tangent diagram.
FormalSpf formal_spf(int n);

// Levelwise tangent axioms plus naturality of the five structure families
// against the diagram's own transitions; polynomial diagrams that present
// a differential object additionally get the tangent-splitting check.
Report check_ind_tangent_axioms(const IndObject& x);

}  // namespace tancat
