#pragma once

#include "tancat/algebra.hpp"

#include <string>
#include <vector>

namespace tancat {

// Object of the category of (first-order) Weil rigs: a finite tensor
// product of one-block objects, carried together with its realization as a
// presented N-algebra. Block b contributes one generator family named with
// the b-th block letter; within a block every degree-2 product vanishes,
// while cross-block products survive.
class WeilObject {
public:
    explicit WeilObject(std::vector<int> blocks);

    const std::vector<int>& blocks() const { return blocks_; }
    const PresentedAlgebra& realized() const { return realized_; }

    bool operator==(const WeilObject& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const WeilObject& o) const { return !(*this == o); }

    // "W[]" for the unit, otherwise "W[n1,...,nk]".
    std::string str() const;

private:
    std::vector<int> blocks_;
    PresentedAlgebra realized_;
};

// The one-block object on n generators (n = 0 gives the unit: plain N).
WeilObject weil_generate(int n);

// Coproduct: block lists concatenate; the realization is rebuilt
// positionally so generator names stay canonical.
WeilObject weil_tensor(const WeilObject& v, const WeilObject& w);

// Parse the CLI syntax "W[a,b,...]" (also accepts "W[]" and "W[0]").
WeilObject weil_parse(const std::string& text);

// Valid morphism = algebra hom that preserves the relations and the
// augmentation: every generator image must have zero constant term.
bool weil_morphism_check(const AlgebraHom& phi);

// Constant term of an element written in the object's generators.
RigScalar augmentation(const WeilObject& w, const Polynomial& element);

}  // namespace tancat
