#include "tancat/algebra.hpp"

#include <algorithm>

namespace tancat {

namespace {

void check_vars_declared(const Polynomial& f, const std::vector<std::string>& gens,
                         const std::string& what) {
    for (const auto& v : f.variables()) {
        if (std::find(gens.begin(), gens.end(), v) == gens.end())
            throw TancatError(what + " mentions undeclared generator: " + v);
    }
}

}  // namespace

PresentedAlgebra::PresentedAlgebra(Rig rig, std::vector<std::string> generators,
                                   std::vector<Polynomial> relations)
    : rig_(rig), generators_(std::move(generators)), relations_(std::move(relations)),
      ideal_(rig, generators_, relations_) {
    for (size_t i = 0; i < generators_.size(); ++i) {
        for (size_t j = i + 1; j < generators_.size(); ++j) {
            if (generators_[i] == generators_[j])
                throw TancatError("duplicate generator: " + generators_[i]);
        }
    }
    for (const auto& f : relations_) {
        if (f.rig() != rig_) throw RigError("relation rig mismatch");
        check_vars_declared(f, generators_, "relation");
        if (rig_ == Rig::NAT && !f.is_zero() && !f.is_monomial())
            throw TancatError("relations over N must be monomials");
    }
}

bool PresentedAlgebra::has_generator(const std::string& name) const {
    return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
}

AlgebraHom::AlgebraHom(PresentedAlgebra source, PresentedAlgebra target,
                       std::map<std::string, Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_.rig() != target_.rig()) throw RigError("hom endpoints live over different rigs");
    for (const auto& g : source_.generators()) {
        auto it = images_.find(g);
        if (it == images_.end()) throw TancatError("no image for generator: " + g);
        if (it->second.rig() != target_.rig()) throw RigError("image rig mismatch");
        check_vars_declared(it->second, target_.generators(), "image of " + g);
    }
    if (images_.size() != source_.generators().size())
        throw TancatError("image map names a generator the source does not declare");
}

AlgebraHom AlgebraHom::identity(const PresentedAlgebra& a) {
    std::map<std::string, Polynomial> images;
    for (const auto& g : a.generators())
        images.emplace(g, Polynomial::variable(a.rig(), g));
    return AlgebraHom(a, a, std::move(images));
}

const Polynomial& AlgebraHom::image(const std::string& gen) const {
    auto it = images_.find(gen);
    if (it == images_.end()) throw TancatError("no image for generator: " + gen);
    return it->second;
}

Polynomial AlgebraHom::apply(const Polynomial& f) const {
    return f.substitute(images_);
}

bool hom_well_defined(const AlgebraHom& phi) {
    for (const auto& f : phi.source().relations()) {
        if (!ideal_member(phi.apply(f), phi.target().ideal())) return false;
    }
    return true;
}

AlgebraHom hom_compose(const AlgebraHom& psi, const AlgebraHom& phi) {
    if (!(phi.target() == psi.source()))
        throw TancatError("hom_compose endpoint mismatch");
    std::map<std::string, Polynomial> images;
    for (const auto& [g, img] : phi.images()) images.emplace(g, psi.apply(img));
    return AlgebraHom(phi.source(), psi.target(), std::move(images));
}

bool hom_equal(const AlgebraHom& phi, const AlgebraHom& psi) {
    if (!(phi.source() == psi.source()) || !(phi.target() == psi.target()))
        throw TancatError("hom_equal endpoint mismatch");
    const auto& ideal = phi.target().ideal();
    for (const auto& g : phi.source().generators()) {
        const Polynomial& a = phi.image(g);
        const Polynomial& b = psi.image(g);
        if (a == b) continue;
        if (phi.target().rig() == Rig::RAT) {
            if (!ideal_member(a.sub(b), ideal)) return false;
        } else {
            // No subtraction: compare normal forms under the (monomial)
            // relations instead.
            if (!(normal_form(a, ideal) == normal_form(b, ideal))) return false;
        }
    }
    return true;
}

PresentedAlgebra tensor(const PresentedAlgebra& b, const PresentedAlgebra& c,
                        const std::vector<std::string>& base) {
    if (b.rig() != c.rig()) throw RigError("tensor factors live over different rigs");
    for (const auto& g : base) {
        if (!b.has_generator(g) || !c.has_generator(g))
            throw TancatError("base generator absent from a factor: " + g);
    }
    auto in_base = [&](const std::string& g) {
        return std::find(base.begin(), base.end(), g) != base.end();
    };

    std::vector<std::string> fiber_b, fiber_c;
    for (const auto& g : b.generators())
        if (!in_base(g)) fiber_b.push_back(g);
    for (const auto& g : c.generators())
        if (!in_base(g)) fiber_c.push_back(g);

    auto collides = [&](const std::string& g, const std::vector<std::string>& other) {
        return std::find(other.begin(), other.end(), g) != other.end();
    };

    // Renaming maps covering every generator of each factor.
    std::map<std::string, Polynomial> ren_b, ren_c;
    std::vector<std::string> gens;
    for (const auto& g : b.generators()) {
        if (in_base(g)) {
            gens.push_back(g);
            ren_b.emplace(g, Polynomial::variable(b.rig(), g));
        }
    }
    std::vector<std::string> out_fiber_b, out_fiber_c;
    for (const auto& g : fiber_b) {
        std::string name = collides(g, fiber_c) ? g + "_1" : g;
        ren_b.emplace(g, Polynomial::variable(b.rig(), name));
        out_fiber_b.push_back(name);
    }
    for (const auto& g : fiber_c) {
        std::string name = collides(g, fiber_b) ? g + "_2" : g;
        ren_c.emplace(g, Polynomial::variable(c.rig(), name));
        out_fiber_c.push_back(name);
    }
    for (const auto& g : base) ren_c.emplace(g, Polynomial::variable(c.rig(), g));
    gens.insert(gens.end(), out_fiber_b.begin(), out_fiber_b.end());
    gens.insert(gens.end(), out_fiber_c.begin(), out_fiber_c.end());

    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i] == gens[j])
                throw TancatError("internal: tensor renaming produced a collision: " + gens[i]);
        }
    }

    std::vector<Polynomial> relations;
    auto push_unique = [&](const Polynomial& f) {
        if (std::find(relations.begin(), relations.end(), f) == relations.end())
            relations.push_back(f);
    };
    for (const auto& f : b.relations()) push_unique(f.substitute(ren_b));
    for (const auto& f : c.relations()) push_unique(f.substitute(ren_c));

    return PresentedAlgebra(b.rig(), std::move(gens), std::move(relations));
}

PresentedAlgebra convert_algebra(const PresentedAlgebra& a, Rig to) {
    std::vector<Polynomial> rels;
    for (const auto& r : a.relations()) rels.push_back(r.convert(to));
    return PresentedAlgebra(to, a.generators(), std::move(rels));
}

}  // namespace tancat
