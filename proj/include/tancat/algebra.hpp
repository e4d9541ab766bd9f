#pragma once

#include "tancat/ideals.hpp"

#include <map>
#include <string>
#include <vector>

namespace tancat {

// Finitely presented commutative algebra over a rig: ordered generators and
// a relation ideal in those generators. Equality is presentation identity;
// no isomorphism checking here.
class PresentedAlgebra {
public:
    PresentedAlgebra(Rig rig, std::vector<std::string> generators,
                     std::vector<Polynomial> relations);

    static PresentedAlgebra free(Rig rig, std::vector<std::string> generators) {
        return PresentedAlgebra(rig, std::move(generators), {});
    }

    Rig rig() const { return rig_; }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const IdealPresentation& ideal() const { return ideal_; }
    bool has_generator(const std::string& name) const;

    bool operator==(const PresentedAlgebra& o) const {
        return rig_ == o.rig_ && generators_ == o.generators_ && relations_ == o.relations_;
    }
    bool operator!=(const PresentedAlgebra& o) const { return !(*this == o); }

private:
    Rig rig_;
    std::vector<std::string> generators_;
    std::vector<Polynomial> relations_;
    IdealPresentation ideal_;
};

// Homomorphism of presented algebras, recorded as generator images. The
// constructor checks shape (every source generator has an image over the
// target's generators); semantic well-definedness is a separate query.
class AlgebraHom {
public:
    AlgebraHom(PresentedAlgebra source, PresentedAlgebra target,
               std::map<std::string, Polynomial> images);

    static AlgebraHom identity(const PresentedAlgebra& a);

    const PresentedAlgebra& source() const { return source_; }
    const PresentedAlgebra& target() const { return target_; }
    const std::map<std::string, Polynomial>& images() const { return images_; }
    const Polynomial& image(const std::string& gen) const;

    // Push a polynomial in source generators through the hom.
    Polynomial apply(const Polynomial& f) const;

private:
    PresentedAlgebra source_;
    PresentedAlgebra target_;
    std::map<std::string, Polynomial> images_;
};

// True iff every source relation lands in the target relation ideal.
bool hom_well_defined(const AlgebraHom& phi);

// Composite "psi after phi": apply phi first. Endpoints must match.
AlgebraHom hom_compose(const AlgebraHom& psi, const AlgebraHom& phi);

// Equality modulo the target relations, generator by generator.
bool hom_equal(const AlgebraHom& phi, const AlgebraHom& psi);

// Tensor product over the shared base generators (empty base = tensor over
// the scalar rig). Fiber generators are renamed with _1/_2 suffixes only
// when the two fibers collide on a name; relations are the deduplicated
// union after renaming.
PresentedAlgebra tensor(const PresentedAlgebra& b, const PresentedAlgebra& c,
                        const std::vector<std::string>& base = {});

// Same presentation with coefficients widened into another rig.
PresentedAlgebra convert_algebra(const PresentedAlgebra& a, Rig to);

}  // namespace tancat
