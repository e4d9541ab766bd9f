// Python surface: documents go in and out as JSON strings in the same
// formats the command line uses, reports come back as (name, passed,
// witness) tuples, and plain judgments come back as bools.

#include "tancat/io.hpp"
#include "tancat/parser.hpp"
#include "tancat/weil.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

namespace py = pybind11;
using namespace tancat;

namespace {

Json parse_doc(const std::string& text) { return Json::parse(text); }

std::string dump_doc(const Json& doc) { return doc.dump(2); }

py::list report_list(const Report& r) {
    py::list out;
    for (const auto& it : r.items)
        out.append(py::make_tuple(it.name, it.passed, it.witness));
    return out;
}

py::dict hom_images(const AlgebraHom& h) {
    py::dict out;
    for (const auto& [gen, img] : h.images()) out[py::str(gen)] = img.str();
    return out;
}

std::map<std::string, Polynomial> parse_images(
    const std::map<std::string, std::string>& assignments, Rig rig) {
    std::map<std::string, Polynomial> images;
    for (const auto& [gen, text] : assignments)
        images.emplace(gen, parse_poly(text, rig));
    return images;
}

}  // namespace

PYBIND11_MODULE(_tancat, m) {
    m.doc() = "tangent structures over polynomial maps and presented algebras";

    py::register_exception<TancatError>(m, "TancatError", PyExc_ValueError);

    m.def(
        "tangent",
        [](const std::string& algebra, bool truncate_jets) {
            return dump_doc(algebra_to_json(
                tangent_algebra(algebra_from_json(parse_doc(algebra)), truncate_jets)
                    .total));
        },
        py::arg("algebra"), py::arg("truncate_jets") = false,
        "Tangent presentation of an algebra document.");

    m.def(
        "tangent2",
        [](const std::string& algebra, bool truncate_jets) {
            return dump_doc(algebra_to_json(second_tangent_algebra(
                algebra_from_json(parse_doc(algebra)), truncate_jets)));
        },
        py::arg("algebra"), py::arg("truncate_jets") = false,
        "Second tangent presentation of an algebra document.");

    m.def(
        "structure_maps",
        [](const std::string& algebra, bool truncate_jets) {
            ZariskiStructureMaps maps =
                structure_maps(algebra_from_json(parse_doc(algebra)), truncate_jets);
            py::dict out;
            out["q"] = hom_images(maps.q);
            out["zeta"] = hom_images(maps.zeta);
            out["add"] = hom_images(maps.add);
            out["v"] = hom_images(maps.v);
            out["gamma"] = hom_images(maps.gamma);
            return out;
        },
        py::arg("algebra"), py::arg("truncate_jets") = false,
        "The five tangent structure ring maps, as generator image tables.");

    m.def(
        "check_zariski",
        [](const std::string& algebra, bool truncate_jets) {
            return report_list(check_zariski_axioms(
                algebra_from_json(parse_doc(algebra)), {}, truncate_jets));
        },
        py::arg("algebra"), py::arg("truncate_jets") = false,
        "Tangent structure axioms for an algebra document.");

    m.def(
        "differentiate",
        [](const std::string& polymap) {
            return dump_doc(
                derivative_to_json(cdc_D(polymap_from_json(parse_doc(polymap)))));
        },
        py::arg("polymap"), "Derivative of a polynomial map document.");

    m.def(
        "dlinear",
        [](const std::string& polymap) {
            return is_dlinear(polymap_from_json(parse_doc(polymap)));
        },
        py::arg("polymap"), "Whether a polynomial map is D-linear.");

    m.def(
        "check_cd",
        [](const std::string& rig, int samples, std::uint64_t seed) {
            return report_list(check_cd_axioms(rig_from_name(rig), samples, seed));
        },
        py::arg("rig") = "Q", py::arg("samples") = 200, py::arg("seed") = 0,
        "Differential combinator axioms on random maps.");

    m.def(
        "check_tangent",
        [](int arity, const std::string& rig, int samples, std::uint64_t seed) {
            return report_list(
                check_tangent_axioms(rig_from_name(rig), arity, samples, seed));
        },
        py::arg("arity"), py::arg("rig") = "Q", py::arg("samples") = 200,
        py::arg("seed") = 0, "Tangent structure axioms at a fixed arity.");

    m.def(
        "weil",
        [](const std::string& object) {
            return dump_doc(algebra_to_json(weil_parse(object).realized()));
        },
        py::arg("object"),
        "Realized presentation of a Weil object such as \"W[1,2]\".");

    m.def(
        "weil_hom",
        [](const std::string& source, const std::string& target,
           const std::map<std::string, std::string>& assignments) {
            AlgebraHom phi(weil_parse(source).realized(),
                           weil_parse(target).realized(),
                           parse_images(assignments, Rig::NAT));
            return weil_morphism_check(phi);
        },
        py::arg("source"), py::arg("target"), py::arg("assignments"),
        "Whether generator images define a Weil morphism.");

    m.def(
        "ind_tangent",
        [](const std::string& diagram) {
            return dump_doc(
                ind_to_json(ind_apply_functor("T", ind_from_json(parse_doc(diagram)))));
        },
        py::arg("diagram"), "Tangent diagram of a diagram document.");

    m.def(
        "diff_object",
        [](const std::string& diagram) {
            DiffObjectResult r = diff_object_check(ind_from_json(parse_doc(diagram)));
            return py::make_tuple(r.is_differential, r.witness);
        },
        py::arg("diagram"),
        "Whether a polynomial diagram presents a differential object; returns "
        "(verdict, witness).");

    m.def(
        "check_ind",
        [](const std::string& diagram) {
            return report_list(check_ind_tangent_axioms(ind_from_json(parse_doc(diagram))));
        },
        py::arg("diagram"), "Levelwise tangent axioms with transition naturality.");

    m.def(
        "spf",
        [](int n) { return render_spf(formal_spf(n)); },
        py::arg("n"), "Rendered formal truncation tower with n levels.");

    m.def(
        "member",
        [](const std::string& algebra, const std::string& poly) {
            PresentedAlgebra b = algebra_from_json(parse_doc(algebra));
            return ideal_member(parse_poly(poly, b.rig()), b.ideal());
        },
        py::arg("algebra"), py::arg("poly"),
        "Ideal membership of a polynomial in an algebra document.");
}
