#include "tancat/io.hpp"

#include "tancat/parser.hpp"

#include <sstream>

namespace tancat {

namespace {

const Json& field(const Json& doc, const char* name, const char* doc_kind) {
    if (!doc.is_object() || !doc.contains(name))
        throw TancatError(std::string(doc_kind) + " document needs a \"" + name +
                          "\" field");
    return doc.at(name);
}

std::string string_field(const Json& doc, const char* name, const char* doc_kind) {
    const Json& v = field(doc, name, doc_kind);
    if (!v.is_string())
        throw TancatError(std::string(doc_kind) + " field \"" + name +
                          "\" must be a string");
    return v.get<std::string>();
}

int int_field(const Json& doc, const char* name, const char* doc_kind) {
    const Json& v = field(doc, name, doc_kind);
    if (!v.is_number_integer())
        throw TancatError(std::string(doc_kind) + " field \"" + name +
                          "\" must be an integer");
    return v.get<int>();
}

std::vector<std::string> string_list(const Json& v, const char* what) {
    if (!v.is_array()) throw TancatError(std::string(what) + " must be a list");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string())
            throw TancatError(std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<std::string> split_path(const std::string& joined) {
    std::vector<std::string> out;
    if (joined.empty()) return out;
    std::stringstream ss(joined);
    std::string part;
    while (std::getline(ss, part, ';')) out.push_back(part);
    return out;
}

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ';';
        out += path[i];
    }
    return out;
}

Json images_to_json(const AlgebraHom& h) {
    Json imgs = Json::object();
    for (const auto& [gen, img] : h.images()) imgs[gen] = img.str();
    return Json{{"images", imgs}};
}

AlgebraHom hom_from_images(const Json& doc, const PresentedAlgebra& source,
                           const PresentedAlgebra& target) {
    const Json& imgs = field(doc, "images", "morphism");
    if (!imgs.is_object())
        throw TancatError("morphism field \"images\" must be an object");
    std::map<std::string, Polynomial> images;
    for (const auto& [gen, text] : imgs.items()) {
        if (!text.is_string())
            throw TancatError("morphism images must be polynomial strings");
        images.emplace(gen, parse_poly(text.get<std::string>(), target.rig()));
    }
    return AlgebraHom(source, target, std::move(images));
}

FiniteCategory index_from_json(const Json& doc) {
    const Json& idx = field(doc, "index", "diagram");
    std::vector<std::string> objects =
        string_list(field(idx, "objects", "index"), "index objects");
    const Json& arrs = field(idx, "arrows", "index");
    if (!arrs.is_array()) throw TancatError("index arrows must be a list");
    std::vector<QuiverArrow> arrows;
    for (const auto& a : arrs)
        arrows.push_back({string_field(a, "name", "arrow"),
                          string_field(a, "src", "arrow"),
                          string_field(a, "dst", "arrow")});
    std::vector<PathRelation> relations;
    if (idx.contains("relations")) {
        const Json& rels = idx.at("relations");
        if (!rels.is_array()) throw TancatError("index relations must be a list");
        for (const auto& r : rels) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw TancatError("index relations must be pairs of path strings");
            relations.emplace_back(split_path(r[0].get<std::string>()),
                                   split_path(r[1].get<std::string>()));
        }
    }
    return FiniteCategory::from_quiver(std::move(objects), std::move(arrows),
                                       std::move(relations));
}

std::string base_name(BaseKind b) {
    switch (b) {
        case BaseKind::APOLY: return "APoly";
        case BaseKind::ALG: return "Alg";
        case BaseKind::ALG_OP: return "AlgOp";
    }
    throw TancatError("unknown diagram base");
}

BaseKind base_from_name(const std::string& name) {
    if (name == "APoly") return BaseKind::APOLY;
    if (name == "Alg") return BaseKind::ALG;
    if (name == "AlgOp") return BaseKind::ALG_OP;
    throw TancatError("unknown diagram base: " + name);
}

}  // namespace

Json algebra_to_json(const PresentedAlgebra& b) {
    Json rels = Json::array();
    for (const auto& r : b.relations()) rels.push_back(r.str());
    return Json{{"rig", rig_name(b.rig())},
                {"generators", b.generators()},
                {"relations", rels}};
}

PresentedAlgebra algebra_from_json(const Json& doc) {
    Rig rig = rig_from_name(string_field(doc, "rig", "algebra"));
    std::vector<std::string> gens =
        string_list(field(doc, "generators", "algebra"), "algebra generators");
    std::vector<Polynomial> rels;
    for (const auto& text :
         string_list(field(doc, "relations", "algebra"), "algebra relations"))
        rels.push_back(parse_poly(text, rig));
    return PresentedAlgebra(rig, std::move(gens), std::move(rels));
}

Json polymap_to_json(const PolyMap& f) {
    Json comps = Json::array();
    for (const auto& c : f.components()) comps.push_back(c.str());
    return Json{{"rig", rig_name(f.rig())},
                {"src", f.src()},
                {"dst", f.dst()},
                {"components", comps}};
}

PolyMap polymap_from_json(const Json& doc) {
    Rig rig = rig_from_name(string_field(doc, "rig", "polynomial map"));
    int src = int_field(doc, "src", "polynomial map");
    int dst = int_field(doc, "dst", "polynomial map");
    std::vector<Polynomial> comps;
    for (const auto& text : string_list(field(doc, "components", "polynomial map"),
                                        "polynomial map components"))
        comps.push_back(parse_poly(text, rig));
    if (static_cast<int>(comps.size()) != dst)
        throw TancatError("polynomial map components do not match dst");
    return PolyMap(rig, src, dst, std::move(comps));
}

Json derivative_to_json(const PolyMap& df) {
    if (df.src() % 2 != 0)
        throw TancatError("derivative printing needs an even source arity");
    int n = df.src() / 2;
    std::map<std::string, Polynomial> names;
    for (int i = 1; i <= n; ++i) {
        names.emplace(poly_var(i), Polynomial::variable(df.rig(), poly_var(i)));
        names.emplace(poly_var(n + i),
                      Polynomial::variable(df.rig(), "y" + std::to_string(i)));
    }
    Json comps = Json::array();
    for (const auto& c : df.components()) comps.push_back(c.substitute(names).str());
    return Json{{"rig", rig_name(df.rig())},
                {"src", df.src()},
                {"dst", df.dst()},
                {"components", comps}};
}

Json ind_to_json(const IndObject& x) {
    const FiniteCategory& idx = x.index();
    Json arrows = Json::array();
    for (const auto& a : idx.arrows())
        arrows.push_back(Json{{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
    Json relations = Json::array();
    for (const auto& [lhs, rhs] : idx.relations())
        relations.push_back(Json::array({join_path(lhs), join_path(rhs)}));
    Json objects = Json::object();
    Json images = Json::object();
    if (x.base() == BaseKind::APOLY) {
        for (const auto& obj : idx.objects())
            objects[obj] = Json{{"rig", rig_name(x.rig())}, {"arity", x.arity_at(obj)}};
        for (const auto& a : idx.arrows())
            images[a.name] = polymap_to_json(x.poly_arrows().at(a.name));
    } else {
        for (const auto& obj : idx.objects())
            objects[obj] = algebra_to_json(x.algebra_at(obj));
        for (const auto& a : idx.arrows())
            images[a.name] = images_to_json(x.hom_arrows().at(a.name));
    }
    return Json{{"index", Json{{"objects", idx.objects()},
                               {"arrows", arrows},
                               {"relations", relations}}},
                {"base", base_name(x.base())},
                {"objects", objects},
                {"arrows", images}};
}

IndObject ind_from_json(const Json& doc) {
    FiniteCategory idx = index_from_json(doc);
    BaseKind base = base_from_name(string_field(doc, "base", "diagram"));
    const Json& objs = field(doc, "objects", "diagram");
    const Json& arrs = field(doc, "arrows", "diagram");
    if (!objs.is_object()) throw TancatError("diagram objects must be an object");
    if (!arrs.is_object()) throw TancatError("diagram arrows must be an object");

    if (base == BaseKind::APOLY) {
        std::map<std::string, int> arities;
        Rig rig = Rig::RAT;
        bool first = true;
        for (const auto& [name, od] : objs.items()) {
            Rig orig = rig_from_name(string_field(od, "rig", "object"));
            if (first) rig = orig;
            else if (orig != rig)
                throw TancatError("diagram objects disagree on the rig");
            first = false;
            arities.emplace(name, int_field(od, "arity", "object"));
        }
        std::map<std::string, PolyMap> maps;
        for (const auto& [name, md] : arrs.items())
            maps.emplace(name, polymap_from_json(md));
        return IndObject::apoly(std::move(idx), rig, std::move(arities),
                                std::move(maps));
    }

    std::map<std::string, PresentedAlgebra> algebras;
    for (const auto& [name, od] : objs.items())
        algebras.emplace(name, algebra_from_json(od));
    auto algebra_named = [&](const std::string& obj) -> const PresentedAlgebra& {
        auto it = algebras.find(obj);
        if (it == algebras.end())
            throw TancatError("object " + obj + " has no algebra assignment");
        return it->second;
    };
    std::map<std::string, AlgebraHom> homs;
    for (const auto& [name, md] : arrs.items()) {
        const QuiverArrow& a = idx.arrow(name);
        const PresentedAlgebra& at_src = algebra_named(a.src);
        const PresentedAlgebra& at_dst = algebra_named(a.dst);
        homs.emplace(name, base == BaseKind::ALG
                               ? hom_from_images(md, at_src, at_dst)
                               : hom_from_images(md, at_dst, at_src));
    }
    return IndObject::algebraic(base, std::move(idx), std::move(algebras),
                                std::move(homs));
}

Json report_record(const CheckItem& item) {
    return Json{{"name", item.name},
                {"status", item.passed ? "PASS" : "FAIL"},
                {"witness", item.witness}};
}

std::string render_algebra_inline(const PresentedAlgebra& b) {
    std::string out = rig_name(b.rig()) + "[";
    for (std::size_t i = 0; i < b.generators().size(); ++i) {
        if (i) out += ", ";
        out += b.generators()[i];
    }
    out += "]";
    if (!b.relations().empty()) {
        out += "/(";
        for (std::size_t i = 0; i < b.relations().size(); ++i) {
            if (i) out += ", ";
            out += b.relations()[i].str();
        }
        out += ")";
    }
    return out;
}

std::string render_spf(const FormalSpf& spf) {
    std::string out;
    for (const auto& obj : spf.scheme.index().objects()) {
        out += "level " + obj + ": ring " +
               render_algebra_inline(spf.scheme.algebra_at(obj)) + ", tangent " +
               render_algebra_inline(spf.tangent.algebra_at(obj)) + "\n";
    }
    return out;
}

}  // namespace tancat
