#include "tancat/io.hpp"
#include "tancat/parser.hpp"
#include "tancat/weil.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace tancat;

namespace {

Json read_doc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TancatError("cannot read file: " + path);
    return Json::parse(in);
}

void print_doc(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int emit_report(const Report& r, const std::string& format) {
    for (const auto& it : r.items) {
        if (format == "records") {
            std::cout << report_record(it).dump() << "\n";
        } else if (it.passed) {
            std::cout << "PASS " << it.name << "\n";
        } else {
            std::cout << "FAIL " << it.name
                      << (it.witness.empty() ? "" : ": " + it.witness) << "\n";
        }
    }
    return r.all_passed() ? 0 : 1;
}

int emit_check(const std::string& name, bool passed, const std::string& witness,
               const std::string& format) {
    Report r;
    r.add(name, passed, witness);
    return emit_report(r, format);
}

void echo_seed(std::uint64_t seed, const std::string& format) {
    if (format == "records")
        std::cout << Json{{"seed", seed}}.dump() << "\n";
    else
        std::cout << "seed: " << seed << "\n";
}

std::string hom_line(const std::string& name, const AlgebraHom& h) {
    std::string out = name + ":";
    bool first = true;
    for (const auto& [gen, img] : h.images()) {
        out += first ? " " : ", ";
        out += gen + " -> " + img.str();
        first = false;
    }
    return out;
}

std::map<std::string, Polynomial> parse_assignments(
    const std::vector<std::string>& assigns, Rig rig) {
    std::map<std::string, Polynomial> images;
    for (const auto& a : assigns) {
        auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0)
            throw TancatError("assignment must look like gen=poly: " + a);
        images.emplace(a.substr(0, eq), parse_poly(a.substr(eq + 1), rig));
    }
    return images;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tangent structures over polynomial maps and presented algebras"};
    app.require_subcommand(1);

    std::string file;
    std::string poly_text;
    std::string weil_spec;
    std::string hom_src, hom_dst;
    std::vector<std::string> assigns;
    std::string format = "text";
    std::string rig_tag = "Q";
    bool truncate = false;
    int samples = 200;
    int arity = 0;
    int levels = 0;
    std::uint64_t seed = 0;
    int rc = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "records"}));
    };

    auto* tan = app.add_subcommand("tangent", "tangent presentation of an algebra");
    tan->add_option("file", file, "algebra document")->required();
    tan->add_flag("--truncate-jets", truncate, "impose zero jet products");
    tan->callback([&] {
        print_doc(algebra_to_json(
            tangent_algebra(algebra_from_json(read_doc(file)), truncate).total));
    });

    auto* tan2 = app.add_subcommand("tangent2", "second tangent presentation");
    tan2->add_option("file", file, "algebra document")->required();
    tan2->add_flag("--truncate-jets", truncate, "impose zero jet products");
    tan2->callback([&] {
        print_doc(algebra_to_json(
            second_tangent_algebra(algebra_from_json(read_doc(file)), truncate)));
    });

    auto* sm = app.add_subcommand("structure-maps",
                                  "the five tangent structure ring maps");
    sm->add_option("file", file, "algebra document")->required();
    sm->add_flag("--truncate-jets", truncate, "impose zero jet products");
    sm->callback([&] {
        ZariskiStructureMaps maps =
            structure_maps(algebra_from_json(read_doc(file)), truncate);
        std::cout << hom_line("q", maps.q) << "\n"
                  << hom_line("zeta", maps.zeta) << "\n"
                  << hom_line("add", maps.add) << "\n"
                  << hom_line("v", maps.v) << "\n"
                  << hom_line("gamma", maps.gamma) << "\n";
    });

    auto* cz = app.add_subcommand("check-zariski",
                                  "tangent structure axioms for an algebra");
    cz->add_option("file", file, "algebra document")->required();
    cz->add_flag("--truncate-jets", truncate, "impose zero jet products");
    add_format(cz);
    cz->callback([&] {
        rc = emit_report(
            check_zariski_axioms(algebra_from_json(read_doc(file)), {}, truncate),
            format);
    });

    auto* dif = app.add_subcommand("differentiate",
                                   "derivative of a polynomial map");
    dif->add_option("file", file, "polynomial map document")->required();
    dif->callback(
        [&] { print_doc(derivative_to_json(cdc_D(polymap_from_json(read_doc(file))))); });

    auto* dl = app.add_subcommand("dlinear", "test a polynomial map for D-linearity");
    dl->add_option("file", file, "polynomial map document")->required();
    add_format(dl);
    dl->callback([&] {
        rc = emit_check("D-linear", is_dlinear(polymap_from_json(read_doc(file))), "",
                        format);
    });

    auto* cd = app.add_subcommand("check-cd",
                                  "differential combinator axioms on random maps");
    cd->add_option("--samples", samples, "random maps per axiom");
    cd->add_option("--seed", seed, "generator seed");
    cd->add_option("--rig", rig_tag, "scalar rig")
        ->check(CLI::IsMember({"N", "Z", "Q"}));
    add_format(cd);
    cd->callback([&] {
        echo_seed(seed, format);
        rc = emit_report(check_cd_axioms(rig_from_name(rig_tag), samples, seed), format);
    });

    auto* ct = app.add_subcommand("check-tangent",
                                  "tangent structure axioms at a fixed arity");
    ct->add_option("--arity", arity, "object arity")->required();
    ct->add_option("--samples", samples, "random maps for naturality");
    ct->add_option("--seed", seed, "generator seed");
    ct->add_option("--rig", rig_tag, "scalar rig")
        ->check(CLI::IsMember({"N", "Z", "Q"}));
    add_format(ct);
    ct->callback([&] {
        echo_seed(seed, format);
        rc = emit_report(
            check_tangent_axioms(rig_from_name(rig_tag), arity, samples, seed), format);
    });

    auto* we = app.add_subcommand("weil", "realized presentation of a Weil object");
    we->add_option("object", weil_spec, "block sizes, e.g. W[1,2]")->required();
    we->callback([&] { print_doc(algebra_to_json(weil_parse(weil_spec).realized())); });

    auto* wh = app.add_subcommand("weil-hom", "validate a Weil morphism");
    wh->add_option("source", hom_src, "source object, e.g. W[1]")->required();
    wh->add_option("target", hom_dst, "target object, e.g. W[1,1]")->required();
    wh->add_option("assignments", assigns, "generator images gen=poly");
    add_format(wh);
    wh->callback([&] {
        AlgebraHom phi(weil_parse(hom_src).realized(), weil_parse(hom_dst).realized(),
                       parse_assignments(assigns, Rig::NAT));
        rc = emit_check("weil morphism", weil_morphism_check(phi), "", format);
    });

    auto* it = app.add_subcommand("ind-tangent", "tangent diagram of a diagram");
    it->add_option("file", file, "diagram document")->required();
    it->callback(
        [&] { print_doc(ind_to_json(ind_apply_functor("T", ind_from_json(read_doc(file))))); });

    auto* dob = app.add_subcommand("diff-object",
                                   "test a polynomial diagram for differential "
                                   "object structure");
    dob->add_option("file", file, "diagram document")->required();
    add_format(dob);
    dob->callback([&] {
        DiffObjectResult r = diff_object_check(ind_from_json(read_doc(file)));
        rc = emit_check("differential object", r.is_differential, r.witness, format);
    });

    auto* ci = app.add_subcommand("check-ind",
                                  "levelwise tangent axioms with naturality");
    ci->add_option("file", file, "diagram document")->required();
    add_format(ci);
    ci->callback([&] {
        rc = emit_report(check_ind_tangent_axioms(ind_from_json(read_doc(file))), format);
    });

    auto* sp = app.add_subcommand("spf", "formal truncation tower presentations");
    sp->add_option("--n", levels, "number of levels")->required();
    sp->callback([&] { std::cout << render_spf(formal_spf(levels)); });

    auto* mem = app.add_subcommand("member", "ideal membership in an algebra");
    mem->add_option("file", file, "algebra document")->required();
    mem->add_option("poly", poly_text, "candidate polynomial")->required();
    add_format(mem);
    mem->callback([&] {
        PresentedAlgebra b = algebra_from_json(read_doc(file));
        rc = emit_check("member", ideal_member(parse_poly(poly_text, b.rig()), b.ideal()),
                        "", format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
