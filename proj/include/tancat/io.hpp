#pragma once

#include "tancat/algebra.hpp"
#include "tancat/cdc.hpp"
#include "tancat/ind.hpp"

#include <json.hpp>

#include <string>

namespace tancat {

// Order-preserving JSON throughout so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Algebra document: {rig: "N"|"Z"|"Q", generators: [names],
// relations: [polynomial strings]}.
Json algebra_to_json(const PresentedAlgebra& b);
PresentedAlgebra algebra_from_json(const Json& doc);

// Polynomial map document: {rig, src, dst, components: [strings over
// x1..x{src}]}.
Json polymap_to_json(const PolyMap& f);
PolyMap polymap_from_json(const Json& doc);

// Derivative printing: the source splits as point block x1..xn and
// derivative block, rendered y1..yn. src must be even.
Json derivative_to_json(const PolyMap& df);

// Diagram document: {index: {objects, arrows: [{name,src,dst}],
// relations: [[path, path]]}, base: "APoly"|"Alg"|"AlgOp", objects:
// name -> object document, arrows: name -> morphism document}. Paths are
// semicolon-joined arrow names in diagrammatic order. Object documents
// are {rig, arity} for APoly and algebra documents otherwise; morphism
// documents are polynomial map documents for APoly and {images:
// {generator: string}} otherwise, written in the stored direction
// (covariant for Alg, the algebra direction for AlgOp).
Json ind_to_json(const IndObject& x);
IndObject ind_from_json(const Json& doc);

// One machine-readable record per check: {name, status, witness}.
Json report_record(const CheckItem& item);

// Compact presentation rendering: "Q[t, d_t]/(t^2, 2*d_t*t)"; the
// relation list is omitted when empty, the bracket kept when not.
std::string render_algebra_inline(const PresentedAlgebra& b);

// One line per truncation level: "level k: ring ..., tangent ...".
std::string render_spf(const FormalSpf& spf);

}  // namespace tancat
