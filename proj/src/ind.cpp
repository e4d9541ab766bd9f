#include "tancat/ind.hpp"

#include <algorithm>

namespace tancat {

namespace {

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) out += ";";
        out += path[i];
    }
    return out;
}

bool same_hom(const AlgebraHom& a, const AlgebraHom& b) {
    return a.source() == b.source() && a.target() == b.target() && a.images() == b.images();
}

std::string hom_encoding(const AlgebraHom& h) {
    std::string out;
    for (const auto& [gen, image] : h.images()) out += gen + "->" + image.str() + "; ";
    return out;
}

}  // namespace

std::string FiniteCategory::Morphism::label() const {
    return path.empty() ? "id_" + src : join_path(path);
}

std::vector<std::string> FiniteCategory::reduce_path(std::vector<std::string> path) const {
    // Each rule replaces its left side by a shorter, or equal-length but
    // lexicographically smaller, right side, so rewriting terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < path.size() && !changed; ++pos) {
            for (const auto& [lhs, rhs] : rules_) {
                if (pos + lhs.size() > path.size()) continue;
                if (!std::equal(lhs.begin(), lhs.end(), path.begin() + pos)) continue;
                std::vector<std::string> next(path.begin(), path.begin() + pos);
                next.insert(next.end(), rhs.begin(), rhs.end());
                next.insert(next.end(), path.begin() + pos + lhs.size(), path.end());
                path = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return path;
}

std::string FiniteCategory::trace_dst(const std::string& src,
                                      const std::vector<std::string>& path) const {
    std::string at = src;
    for (const auto& name : path) {
        const QuiverArrow& a = arrow(name);
        if (a.src != at)
            throw TancatError("path is not composable at arrow " + name);
        at = a.dst;
    }
    return at;
}

FiniteCategory FiniteCategory::from_quiver(std::vector<std::string> objects,
                                           std::vector<QuiverArrow> arrows,
                                           std::vector<PathRelation> relations,
                                           std::size_t cap) {
    FiniteCategory c;
    c.objects_ = std::move(objects);
    c.arrows_ = std::move(arrows);
    for (size_t i = 0; i < c.objects_.size(); ++i)
        for (size_t j = i + 1; j < c.objects_.size(); ++j)
            if (c.objects_[i] == c.objects_[j])
                throw TancatError("duplicate object name: " + c.objects_[i]);
    for (size_t i = 0; i < c.arrows_.size(); ++i) {
        const QuiverArrow& a = c.arrows_[i];
        if (!c.has_object(a.src) || !c.has_object(a.dst))
            throw TancatError("arrow " + a.name + " references an unknown object");
        for (size_t j = i + 1; j < c.arrows_.size(); ++j)
            if (a.name == c.arrows_[j].name)
                throw TancatError("duplicate arrow name: " + a.name);
    }

    for (auto [lhs, rhs] : relations) {
        if (lhs == rhs) continue;
        if (lhs.empty() && rhs.empty()) continue;
        // Endpoints of an identity side come from the other side.
        const std::vector<std::string>& probe = lhs.empty() ? rhs : lhs;
        std::string src = c.arrow(probe.front()).src;
        if (!lhs.empty() && !rhs.empty() && c.arrow(lhs.front()).src != c.arrow(rhs.front()).src)
            throw TancatError("relation sides do not start at one object");
        std::string ldst = c.trace_dst(src, lhs);
        std::string rdst = c.trace_dst(src, rhs);
        if (ldst != rdst)
            throw TancatError("relation sides do not end at one object");
        bool swap = lhs.size() < rhs.size() ||
                    (lhs.size() == rhs.size() && join_path(lhs) < join_path(rhs));
        if (swap) std::swap(lhs, rhs);
        c.rules_.emplace_back(std::move(lhs), std::move(rhs));
    }
    std::sort(c.rules_.begin(), c.rules_.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first < b.first;
    });

    // Breadth-first enumeration of normal forms, extending one arrow at a
    // time; discovery order is the morphism order.
    std::map<std::pair<std::string, std::vector<std::string>>, int> seen;
    auto add = [&](const std::string& src, std::vector<std::string> path) -> bool {
        auto key = std::make_pair(src, path);
        if (seen.count(key)) return false;
        if (c.morphisms_.size() >= cap)
            throw TancatError("index category exceeds the size cap");
        seen[key] = static_cast<int>(c.morphisms_.size());
        c.morphisms_.push_back({src, c.trace_dst(src, path), std::move(path)});
        return true;
    };
    for (const auto& obj : c.objects_) add(obj, {});
    for (size_t cursor = 0; cursor < c.morphisms_.size(); ++cursor) {
        Morphism m = c.morphisms_[cursor];
        for (const auto& a : c.arrows_) {
            if (a.src != m.dst) continue;
            std::vector<std::string> path = m.path;
            path.push_back(a.name);
            add(m.src, c.reduce_path(std::move(path)));
        }
    }

    // Full composition table; closure failures mean the relations do not
    // normalize composites consistently.
    size_t count = c.morphisms_.size();
    c.table_.assign(count, std::vector<int>(count, -1));
    for (size_t f = 0; f < count; ++f) {
        for (size_t g = 0; g < count; ++g) {
            if (c.morphisms_[f].dst != c.morphisms_[g].src) continue;
            std::vector<std::string> path = c.morphisms_[f].path;
            path.insert(path.end(), c.morphisms_[g].path.begin(), c.morphisms_[g].path.end());
            auto key = std::make_pair(c.morphisms_[f].src, c.reduce_path(std::move(path)));
            auto it = seen.find(key);
            if (it == seen.end())
                throw TancatError("path relations do not close the composition table");
            c.table_[f][g] = it->second;
        }
    }
    for (size_t f = 0; f < count; ++f)
        for (size_t g = 0; g < count; ++g) {
            if (c.table_[f][g] < 0) continue;
            for (size_t h = 0; h < count; ++h) {
                if (c.table_[g][h] < 0) continue;
                if (c.table_[c.table_[f][g]][h] != c.table_[f][c.table_[g][h]])
                    throw TancatError("path relations give a non-associative table");
            }
        }
    return c;
}

bool FiniteCategory::has_object(const std::string& name) const {
    return std::find(objects_.begin(), objects_.end(), name) != objects_.end();
}

const QuiverArrow& FiniteCategory::arrow(const std::string& name) const {
    for (const auto& a : arrows_)
        if (a.name == name) return a;
    throw TancatError("unknown arrow: " + name);
}

int FiniteCategory::identity_index(const std::string& obj) const {
    for (size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].path.empty() && morphisms_[i].src == obj)
            return static_cast<int>(i);
    throw TancatError("unknown object: " + obj);
}

int FiniteCategory::normalize(const std::string& src,
                              const std::vector<std::string>& path) const {
    trace_dst(src, path);
    std::vector<std::string> nf = reduce_path(path);
    for (size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].src == src && morphisms_[i].path == nf)
            return static_cast<int>(i);
    throw TancatError("path does not normalize into the category");
}

int FiniteCategory::compose(int after, int first) const {
    if (first < 0 || after < 0 || first >= static_cast<int>(morphisms_.size()) ||
        after >= static_cast<int>(morphisms_.size()))
        throw TancatError("morphism index out of range");
    int r = table_[first][after];
    if (r < 0) throw TancatError("morphisms are not composable");
    return r;
}

bool check_filtered(const FiniteCategory& c) {
    if (c.objects().empty()) return false;
    const auto& mors = c.morphisms();
    for (const auto& i : c.objects()) {
        for (const auto& j : c.objects()) {
            bool cospan = false;
            for (const auto& k : c.objects()) {
                bool from_i = false, from_j = false;
                for (const auto& m : mors) {
                    if (m.dst != k) continue;
                    if (m.src == i) from_i = true;
                    if (m.src == j) from_j = true;
                }
                if (from_i && from_j) {
                    cospan = true;
                    break;
                }
            }
            if (!cospan) return false;
        }
    }
    for (size_t f = 0; f < mors.size(); ++f) {
        for (size_t g = f + 1; g < mors.size(); ++g) {
            if (mors[f].src != mors[g].src || mors[f].dst != mors[g].dst) continue;
            bool equalized = false;
            for (size_t w = 0; w < mors.size() && !equalized; ++w) {
                if (mors[w].src != mors[f].dst) continue;
                equalized = c.compose(static_cast<int>(w), static_cast<int>(f)) ==
                            c.compose(static_cast<int>(w), static_cast<int>(g));
            }
            if (!equalized) return false;
        }
    }
    return true;
}

IndObject IndObject::apoly(FiniteCategory index, Rig rig, std::map<std::string, int> arities,
                           std::map<std::string, PolyMap> arrow_maps) {
    if (!check_filtered(index))
        throw TancatError("ind-objects need a filtered index category");
    IndObject x;
    x.base_ = BaseKind::APOLY;
    x.index_ = std::move(index);
    x.rig_ = rig;
    x.arities_ = std::move(arities);
    x.poly_arrows_ = std::move(arrow_maps);
    if (x.arities_.size() != x.index_.objects().size())
        throw TancatError("object assignment does not match the index objects");
    for (const auto& obj : x.index_.objects()) {
        auto it = x.arities_.find(obj);
        if (it == x.arities_.end() || it->second < 0)
            throw TancatError("object " + obj + " has no arity assignment");
    }
    if (x.poly_arrows_.size() != x.index_.arrows().size())
        throw TancatError("arrow assignment does not match the index arrows");
    for (const auto& a : x.index_.arrows()) {
        auto it = x.poly_arrows_.find(a.name);
        if (it == x.poly_arrows_.end())
            throw TancatError("arrow " + a.name + " has no image assignment");
        const PolyMap& f = it->second;
        if (f.rig() != rig || f.src() != x.arity_at(a.src) || f.dst() != x.arity_at(a.dst))
            throw TancatError("arrow " + a.name + " image has the wrong type");
    }
    // Path relations collapse inside normal forms, so functoriality needs
    // exactly: equal normal forms get equal images whichever path produced
    // them. Composites through the table are re-derived and compared.
    const auto& mors = x.index_.morphisms();
    for (size_t f = 0; f < mors.size(); ++f)
        for (size_t g = 0; g < mors.size(); ++g) {
            if (mors[f].dst != mors[g].src) continue;
            int fg = x.index_.compose(static_cast<int>(g), static_cast<int>(f));
            PolyMap lhs = pm_compose(x.poly_transition(static_cast<int>(g)),
                                     x.poly_transition(static_cast<int>(f)));
            if (lhs != x.poly_transition(fg))
                throw TancatError("arrow images do not respect the path relations");
        }
    return x;
}

IndObject IndObject::algebraic(BaseKind kind, FiniteCategory index,
                               std::map<std::string, PresentedAlgebra> algebras,
                               std::map<std::string, AlgebraHom> arrow_homs) {
    if (kind == BaseKind::APOLY)
        throw TancatError("polynomial diagrams use the apoly factory");
    if (!check_filtered(index))
        throw TancatError("ind-objects need a filtered index category");
    IndObject x;
    x.base_ = kind;
    x.index_ = std::move(index);
    x.algebras_ = std::move(algebras);
    x.hom_arrows_ = std::move(arrow_homs);
    if (x.algebras_.size() != x.index_.objects().size())
        throw TancatError("object assignment does not match the index objects");
    for (const auto& obj : x.index_.objects())
        if (!x.algebras_.count(obj))
            throw TancatError("object " + obj + " has no algebra assignment");
    x.rig_ = x.algebras_.begin()->second.rig();
    for (const auto& [name, alg] : x.algebras_)
        if (alg.rig() != x.rig_)
            throw TancatError("algebra diagram needs one coefficient rig");
    if (x.hom_arrows_.size() != x.index_.arrows().size())
        throw TancatError("arrow assignment does not match the index arrows");
    for (const auto& a : x.index_.arrows()) {
        auto it = x.hom_arrows_.find(a.name);
        if (it == x.hom_arrows_.end())
            throw TancatError("arrow " + a.name + " has no image assignment");
        const AlgebraHom& h = it->second;
        const PresentedAlgebra& expect_src =
            kind == BaseKind::ALG ? x.algebra_at(a.src) : x.algebra_at(a.dst);
        const PresentedAlgebra& expect_dst =
            kind == BaseKind::ALG ? x.algebra_at(a.dst) : x.algebra_at(a.src);
        if (h.source() != expect_src || h.target() != expect_dst)
            throw TancatError("arrow " + a.name + " image has the wrong endpoints");
        if (!hom_well_defined(h))
            throw TancatError("arrow " + a.name + " image is not well-defined");
    }
    const auto& mors = x.index_.morphisms();
    for (size_t f = 0; f < mors.size(); ++f)
        for (size_t g = 0; g < mors.size(); ++g) {
            if (mors[f].dst != mors[g].src) continue;
            int fg = x.index_.compose(static_cast<int>(g), static_cast<int>(f));
            AlgebraHom gh = x.hom_transition(static_cast<int>(g));
            AlgebraHom fh = x.hom_transition(static_cast<int>(f));
            AlgebraHom lhs = kind == BaseKind::ALG ? hom_compose(gh, fh) : hom_compose(fh, gh);
            if (!hom_equal(lhs, x.hom_transition(fg)))
                throw TancatError("arrow images do not respect the path relations");
        }
    return x;
}

int IndObject::arity_at(const std::string& obj) const {
    auto it = arities_.find(obj);
    if (it == arities_.end()) throw TancatError("unknown diagram object: " + obj);
    return it->second;
}

const PresentedAlgebra& IndObject::algebra_at(const std::string& obj) const {
    auto it = algebras_.find(obj);
    if (it == algebras_.end()) throw TancatError("unknown diagram object: " + obj);
    return it->second;
}

PolyMap IndObject::poly_transition(int mor) const {
    if (base_ != BaseKind::APOLY)
        throw TancatError("diagram does not live in the polynomial base");
    const auto& m = index_.morphisms().at(mor);
    PolyMap acc = pm_identity(rig_, arity_at(m.src));
    for (const auto& name : m.path) acc = pm_compose(poly_arrows_.at(name), acc);
    return acc;
}

AlgebraHom IndObject::hom_transition(int mor) const {
    if (base_ == BaseKind::APOLY)
        throw TancatError("diagram does not live in an algebra base");
    const auto& m = index_.morphisms().at(mor);
    if (base_ == BaseKind::ALG) {
        AlgebraHom acc = AlgebraHom::identity(algebra_at(m.src));
        for (const auto& name : m.path) acc = hom_compose(hom_arrows_.at(name), acc);
        return acc;
    }
    AlgebraHom acc = AlgebraHom::identity(algebra_at(m.dst));
    for (auto it = m.path.rbegin(); it != m.path.rend(); ++it)
        acc = hom_compose(hom_arrows_.at(*it), acc);
    return acc;
}

bool IndObject::operator==(const IndObject& o) const {
    if (base_ != o.base_ || rig_ != o.rig_ || index_ != o.index_) return false;
    if (arities_ != o.arities_ || algebras_ != o.algebras_) return false;
    if (poly_arrows_ != o.poly_arrows_) return false;
    if (hom_arrows_.size() != o.hom_arrows_.size()) return false;
    for (const auto& [name, h] : hom_arrows_) {
        auto it = o.hom_arrows_.find(name);
        if (it == o.hom_arrows_.end() || !same_hom(h, it->second)) return false;
    }
    return true;
}

IndMorphismSame IndMorphismSame::of_polys(IndObject source, IndObject target,
                                          std::map<std::string, PolyMap> family) {
    if (source.base() != BaseKind::APOLY || target.base() != BaseKind::APOLY)
        throw TancatError("polynomial families need polynomial diagrams");
    if (source.index() != target.index())
        throw TancatError("same-index families need one index category");
    IndMorphismSame r;
    r.source_ = std::move(source);
    r.target_ = std::move(target);
    r.poly_family_ = std::move(family);
    if (r.poly_family_.size() != r.source_.index().objects().size())
        throw TancatError("family does not match the index objects");
    for (const auto& obj : r.source_.index().objects()) {
        auto it = r.poly_family_.find(obj);
        if (it == r.poly_family_.end())
            throw TancatError("family misses level " + obj);
        const PolyMap& f = it->second;
        if (f.rig() != r.source_.rig() || f.src() != r.source_.arity_at(obj) ||
            f.dst() != r.target_.arity_at(obj))
            throw TancatError("family level " + obj + " has the wrong type");
    }
    return r;
}

IndMorphismSame IndMorphismSame::of_homs(IndObject source, IndObject target,
                                         std::map<std::string, AlgebraHom> family) {
    if (source.base() == BaseKind::APOLY || target.base() != source.base())
        throw TancatError("algebra families need algebra diagrams of one kind");
    if (source.index() != target.index())
        throw TancatError("same-index families need one index category");
    IndMorphismSame r;
    r.source_ = std::move(source);
    r.target_ = std::move(target);
    r.hom_family_ = std::move(family);
    if (r.hom_family_.size() != r.source_.index().objects().size())
        throw TancatError("family does not match the index objects");
    bool op = r.source_.base() == BaseKind::ALG_OP;
    for (const auto& obj : r.source_.index().objects()) {
        auto it = r.hom_family_.find(obj);
        if (it == r.hom_family_.end())
            throw TancatError("family misses level " + obj);
        const AlgebraHom& h = it->second;
        const PresentedAlgebra& expect_src =
            op ? r.target_.algebra_at(obj) : r.source_.algebra_at(obj);
        const PresentedAlgebra& expect_dst =
            op ? r.source_.algebra_at(obj) : r.target_.algebra_at(obj);
        if (h.source() != expect_src || h.target() != expect_dst)
            throw TancatError("family level " + obj + " has the wrong endpoints");
        if (!hom_well_defined(h))
            throw TancatError("family level " + obj + " is not well-defined");
    }
    return r;
}

const PolyMap& IndMorphismSame::poly_at(const std::string& obj) const {
    auto it = poly_family_.find(obj);
    if (it == poly_family_.end()) throw TancatError("unknown family level: " + obj);
    return it->second;
}

const AlgebraHom& IndMorphismSame::hom_at(const std::string& obj) const {
    auto it = hom_family_.find(obj);
    if (it == hom_family_.end()) throw TancatError("unknown family level: " + obj);
    return it->second;
}

bool IndMorphismSame::operator==(const IndMorphismSame& o) const {
    if (source_ != o.source_ || target_ != o.target_) return false;
    if (poly_family_ != o.poly_family_) return false;
    if (hom_family_.size() != o.hom_family_.size()) return false;
    for (const auto& [obj, h] : hom_family_) {
        auto it = o.hom_family_.find(obj);
        if (it == o.hom_family_.end() || !same_hom(h, it->second)) return false;
    }
    return true;
}

IndMorphismSame ind_identity(const IndObject& x) {
    if (x.base() == BaseKind::APOLY) {
        std::map<std::string, PolyMap> fam;
        for (const auto& obj : x.index().objects())
            fam.emplace(obj, pm_identity(x.rig(), x.arity_at(obj)));
        return IndMorphismSame::of_polys(x, x, std::move(fam));
    }
    std::map<std::string, AlgebraHom> fam;
    for (const auto& obj : x.index().objects())
        fam.emplace(obj, AlgebraHom::identity(x.algebra_at(obj)));
    return IndMorphismSame::of_homs(x, x, std::move(fam));
}

namespace {

// Composite of a leg into level j with the target transition u out of j;
// the algebra-direction order flips for scheme diagrams.
IndMorphismGeneral::Leg push_leg(const IndObject& y, int u, const IndMorphismGeneral::Leg& leg) {
    const auto& m = y.index().morphisms().at(u);
    IndMorphismGeneral::Leg out;
    out.at = m.dst;
    if (y.base() == BaseKind::APOLY)
        out.poly = pm_compose(y.poly_transition(u), *leg.poly);
    else if (y.base() == BaseKind::ALG)
        out.hom = hom_compose(y.hom_transition(u), *leg.hom);
    else
        out.hom = hom_compose(*leg.hom, y.hom_transition(u));
    return out;
}

bool legs_equal_base(const IndObject& y, const IndMorphismGeneral::Leg& a,
                     const IndMorphismGeneral::Leg& b) {
    if (a.at != b.at) return false;
    if (y.base() == BaseKind::APOLY) return *a.poly == *b.poly;
    return hom_equal(*a.hom, *b.hom);
}

std::string leg_encoding(const IndMorphismGeneral::Leg& leg) {
    return leg.poly ? leg.poly->str() : hom_encoding(*leg.hom);
}

int object_position(const IndObject& y, const std::string& obj) {
    const auto& objs = y.index().objects();
    return static_cast<int>(std::find(objs.begin(), objs.end(), obj) - objs.begin());
}

IndMorphismGeneral::Leg normalize_leg(const IndObject& y, IndMorphismGeneral::Leg leg) {
    IndMorphismGeneral::Leg best = leg;
    int best_pos = object_position(y, best.at);
    std::string best_key = leg_encoding(best);
    const auto& mors = y.index().morphisms();
    for (size_t u = 0; u < mors.size(); ++u) {
        if (mors[u].src != leg.at) continue;
        IndMorphismGeneral::Leg cand = push_leg(y, static_cast<int>(u), leg);
        int pos = object_position(y, cand.at);
        std::string key = leg_encoding(cand);
        if (pos < best_pos || (pos == best_pos && key < best_key)) {
            best = std::move(cand);
            best_pos = pos;
            best_key = std::move(key);
        }
    }
    return best;
}

bool colim_equiv_legs(const IndObject& y, const IndMorphismGeneral::Leg& a,
                      const IndMorphismGeneral::Leg& b) {
    const auto& mors = y.index().morphisms();
    for (const auto& k : y.index().objects()) {
        for (size_t u = 0; u < mors.size(); ++u) {
            if (mors[u].src != a.at || mors[u].dst != k) continue;
            IndMorphismGeneral::Leg pa = push_leg(y, static_cast<int>(u), a);
            for (size_t up = 0; up < mors.size(); ++up) {
                if (mors[up].src != b.at || mors[up].dst != k) continue;
                if (legs_equal_base(y, pa, push_leg(y, static_cast<int>(up), b))) return true;
            }
        }
    }
    return false;
}

}  // namespace

IndMorphismGeneral IndMorphismGeneral::of(IndObject source, IndObject target,
                                          std::map<std::string, Leg> legs) {
    if (source.base() != target.base())
        throw TancatError("general morphisms need diagrams over one base");
    IndMorphismGeneral r;
    r.source_ = std::move(source);
    r.target_ = std::move(target);
    r.legs_ = std::move(legs);
    if (r.legs_.size() != r.source_.index().objects().size())
        throw TancatError("legs do not match the source index objects");
    bool poly_base = r.source_.base() == BaseKind::APOLY;
    bool op = r.source_.base() == BaseKind::ALG_OP;
    for (const auto& obj : r.source_.index().objects()) {
        auto it = r.legs_.find(obj);
        if (it == r.legs_.end()) throw TancatError("legs miss level " + obj);
        Leg& leg = it->second;
        if (!r.target_.index().has_object(leg.at))
            throw TancatError("leg at " + obj + " lands outside the target index");
        if (poly_base != leg.poly.has_value() || poly_base == leg.hom.has_value())
            throw TancatError("leg at " + obj + " has the wrong base kind");
        if (poly_base) {
            if (leg.poly->rig() != r.source_.rig() ||
                leg.poly->src() != r.source_.arity_at(obj) ||
                leg.poly->dst() != r.target_.arity_at(leg.at))
                throw TancatError("leg at " + obj + " has the wrong type");
        } else {
            const PresentedAlgebra& expect_src =
                op ? r.target_.algebra_at(leg.at) : r.source_.algebra_at(obj);
            const PresentedAlgebra& expect_dst =
                op ? r.source_.algebra_at(obj) : r.target_.algebra_at(leg.at);
            if (leg.hom->source() != expect_src || leg.hom->target() != expect_dst)
                throw TancatError("leg at " + obj + " has the wrong endpoints");
            if (!hom_well_defined(*leg.hom))
                throw TancatError("leg at " + obj + " is not well-defined");
        }
        leg = normalize_leg(r.target_, std::move(leg));
    }
    return r;
}

const IndMorphismGeneral::Leg& IndMorphismGeneral::leg_at(const std::string& obj) const {
    auto it = legs_.find(obj);
    if (it == legs_.end()) throw TancatError("unknown leg level: " + obj);
    return it->second;
}

bool IndMorphismGeneral::operator==(const IndMorphismGeneral& o) const {
    if (source_ != o.source_ || target_ != o.target_) return false;
    if (legs_.size() != o.legs_.size()) return false;
    for (const auto& [obj, leg] : legs_) {
        auto it = o.legs_.find(obj);
        if (it == o.legs_.end() || leg.at != it->second.at) return false;
        if (leg.poly.has_value() != it->second.poly.has_value()) return false;
        if (leg.poly && *leg.poly != *it->second.poly) return false;
        if (leg.hom && !same_hom(*leg.hom, *it->second.hom)) return false;
    }
    return true;
}

IndMorphismGeneral generalize(const IndMorphismSame& rho) {
    std::map<std::string, IndMorphismGeneral::Leg> legs;
    for (const auto& obj : rho.source().index().objects()) {
        IndMorphismGeneral::Leg leg;
        leg.at = obj;
        if (rho.source().base() == BaseKind::APOLY)
            leg.poly = rho.poly_at(obj);
        else
            leg.hom = rho.hom_at(obj);
        legs.emplace(obj, std::move(leg));
    }
    return IndMorphismGeneral::of(rho.source(), rho.target(), std::move(legs));
}

bool colim_hom_equiv(const std::string& j, const PolyMap& f, const std::string& jp,
                     const PolyMap& fp, const IndObject& y) {
    if (y.base() != BaseKind::APOLY)
        throw TancatError("polynomial comparison needs a polynomial diagram");
    if (!y.index().has_object(j) || !y.index().has_object(jp))
        throw TancatError("unknown diagram object");
    if (f.rig() != y.rig() || fp.rig() != y.rig() || f.src() != fp.src() ||
        f.dst() != y.arity_at(j) || fp.dst() != y.arity_at(jp))
        throw TancatError("colimit comparison endpoints do not match");
    IndMorphismGeneral::Leg a{j, f, std::nullopt};
    IndMorphismGeneral::Leg b{jp, fp, std::nullopt};
    return colim_equiv_legs(y, a, b);
}

bool colim_hom_equiv(const std::string& j, const AlgebraHom& f, const std::string& jp,
                     const AlgebraHom& fp, const IndObject& y) {
    if (y.base() == BaseKind::APOLY)
        throw TancatError("algebra comparison needs an algebra diagram");
    if (!y.index().has_object(j) || !y.index().has_object(jp))
        throw TancatError("unknown diagram object");
    bool op = y.base() == BaseKind::ALG_OP;
    const PresentedAlgebra& fa = op ? f.source() : f.target();
    const PresentedAlgebra& fpa = op ? fp.source() : fp.target();
    const PresentedAlgebra& fx = op ? f.target() : f.source();
    const PresentedAlgebra& fpx = op ? fp.target() : fp.source();
    if (fa != y.algebra_at(j) || fpa != y.algebra_at(jp) || fx != fpx)
        throw TancatError("colimit comparison endpoints do not match");
    IndMorphismGeneral::Leg a{j, std::nullopt, f};
    IndMorphismGeneral::Leg b{jp, std::nullopt, fp};
    return colim_equiv_legs(y, a, b);
}

std::string ind_naturality_witness(const IndMorphismSame& rho) {
    const IndObject& x = rho.source();
    const IndObject& y = rho.target();
    for (const auto& a : x.index().arrows()) {
        if (x.base() == BaseKind::APOLY) {
            PolyMap lhs = pm_compose(rho.poly_at(a.dst), x.poly_arrows().at(a.name));
            PolyMap rhs = pm_compose(y.poly_arrows().at(a.name), rho.poly_at(a.src));
            if (lhs != rhs) return a.name;
        } else if (x.base() == BaseKind::ALG) {
            AlgebraHom lhs = hom_compose(rho.hom_at(a.dst), x.hom_arrows().at(a.name));
            AlgebraHom rhs = hom_compose(y.hom_arrows().at(a.name), rho.hom_at(a.src));
            if (!hom_equal(lhs, rhs)) return a.name;
        } else {
            AlgebraHom lhs = hom_compose(rho.hom_at(a.src), y.hom_arrows().at(a.name));
            AlgebraHom rhs = hom_compose(x.hom_arrows().at(a.name), rho.hom_at(a.dst));
            if (!hom_equal(lhs, rhs)) return a.name;
        }
    }
    return "";
}

bool ind_morphism_valid(const IndMorphismSame& rho) {
    return ind_naturality_witness(rho).empty();
}

bool ind_morphism_valid(const IndMorphismGeneral& rho) {
    const IndObject& x = rho.source();
    for (size_t m = 0; m < x.index().morphisms().size(); ++m) {
        const auto& mor = x.index().morphisms()[m];
        if (mor.path.empty()) continue;
        const IndMorphismGeneral::Leg& from = rho.leg_at(mor.src);
        const IndMorphismGeneral::Leg& to = rho.leg_at(mor.dst);
        IndMorphismGeneral::Leg pulled;
        pulled.at = to.at;
        if (x.base() == BaseKind::APOLY)
            pulled.poly = pm_compose(*to.poly, x.poly_transition(static_cast<int>(m)));
        else if (x.base() == BaseKind::ALG)
            pulled.hom = hom_compose(*to.hom, x.hom_transition(static_cast<int>(m)));
        else
            pulled.hom = hom_compose(x.hom_transition(static_cast<int>(m)), *to.hom);
        if (!colim_equiv_legs(rho.target(), from, pulled)) return false;
    }
    return true;
}

IndMorphismSame ind_compose(const IndMorphismSame& sigma, const IndMorphismSame& rho) {
    if (rho.target() != sigma.source())
        throw TancatError("ind-morphisms are not composable");
    if (!ind_morphism_valid(rho) || !ind_morphism_valid(sigma))
        throw TancatError("cannot compose invalid ind-morphisms");
    if (rho.source().base() == BaseKind::APOLY) {
        std::map<std::string, PolyMap> fam;
        for (const auto& obj : rho.source().index().objects())
            fam.emplace(obj, pm_compose(sigma.poly_at(obj), rho.poly_at(obj)));
        return IndMorphismSame::of_polys(rho.source(), sigma.target(), std::move(fam));
    }
    bool op = rho.source().base() == BaseKind::ALG_OP;
    std::map<std::string, AlgebraHom> fam;
    for (const auto& obj : rho.source().index().objects()) {
        AlgebraHom h = op ? hom_compose(rho.hom_at(obj), sigma.hom_at(obj))
                          : hom_compose(sigma.hom_at(obj), rho.hom_at(obj));
        fam.emplace(obj, std::move(h));
    }
    return IndMorphismSame::of_homs(rho.source(), sigma.target(), std::move(fam));
}

IndMorphismGeneral ind_compose(const IndMorphismGeneral& sigma, const IndMorphismGeneral& rho) {
    if (rho.target() != sigma.source())
        throw TancatError("ind-morphisms are not composable");
    if (!ind_morphism_valid(rho) || !ind_morphism_valid(sigma))
        throw TancatError("cannot compose invalid ind-morphisms");
    std::map<std::string, IndMorphismGeneral::Leg> legs;
    for (const auto& obj : rho.source().index().objects()) {
        const IndMorphismGeneral::Leg& first = rho.leg_at(obj);
        const IndMorphismGeneral::Leg& second = sigma.leg_at(first.at);
        IndMorphismGeneral::Leg leg;
        leg.at = second.at;
        if (rho.source().base() == BaseKind::APOLY)
            leg.poly = pm_compose(*second.poly, *first.poly);
        else if (rho.source().base() == BaseKind::ALG)
            leg.hom = hom_compose(*second.hom, *first.hom);
        else
            leg.hom = hom_compose(*first.hom, *second.hom);
        legs.emplace(obj, std::move(leg));
    }
    return IndMorphismGeneral::of(rho.source(), sigma.target(), std::move(legs));
}

IndMorphismGeneral ind_compose(const IndMorphismGeneral& sigma, const IndMorphismSame& rho) {
    return ind_compose(sigma, generalize(rho));
}

IndMorphismGeneral ind_compose(const IndMorphismSame& sigma, const IndMorphismGeneral& rho) {
    return ind_compose(generalize(sigma), rho);
}

bool ind_general_equal(const IndMorphismGeneral& a, const IndMorphismGeneral& b) {
    if (a.source() != b.source() || a.target() != b.target()) return false;
    for (const auto& obj : a.source().index().objects())
        if (!colim_equiv_legs(a.target(), a.leg_at(obj), b.leg_at(obj))) return false;
    return true;
}

namespace {

PolyMap apply_poly_functor(const std::string& tag, const PolyMap& f) {
    if (tag == "id") return f;
    if (tag == "T") return tangent_T(f);
    if (tag == "TT") return tangent_T(tangent_T(f));
    throw TancatError("unregistered base functor: " + tag);
}

int apply_arity_functor(const std::string& tag, int n) {
    if (tag == "id") return n;
    if (tag == "T") return 2 * n;
    if (tag == "TT") return 4 * n;
    throw TancatError("unregistered base functor: " + tag);
}

PresentedAlgebra apply_algebra_functor(const std::string& tag, const PresentedAlgebra& b) {
    if (tag == "id") return b;
    if (tag == "T") return tangent_algebra(b).total;
    if (tag == "TT") return tangent_algebra(tangent_algebra(b).total).total;
    throw TancatError("unregistered base functor: " + tag);
}

AlgebraHom apply_hom_functor(const std::string& tag, const AlgebraHom& h) {
    if (tag == "id") return h;
    if (tag == "T") return tangent_hom(h);
    if (tag == "TT") return tangent_hom(tangent_hom(h));
    throw TancatError("unregistered base functor: " + tag);
}

// The realized fiber-product diagram: arity 3n levels for polynomials,
// two-fold jet power levels for algebras.
IndObject fiber_square_diagram(const IndObject& x) {
    if (x.base() == BaseKind::APOLY) {
        std::map<std::string, int> arities;
        for (const auto& [obj, n] : x.arities()) arities.emplace(obj, 3 * n);
        std::map<std::string, PolyMap> arrows;
        for (const auto& [name, f] : x.poly_arrows()) arrows.emplace(name, tangent_T2_map(f));
        return IndObject::apoly(x.index(), x.rig(), std::move(arities), std::move(arrows));
    }
    std::map<std::string, PresentedAlgebra> algebras;
    for (const auto& [obj, b] : x.algebras()) algebras.emplace(obj, tangent_power(b, 2));
    std::map<std::string, AlgebraHom> arrows;
    for (const auto& [name, h] : x.hom_arrows()) arrows.emplace(name, tangent_power_hom(h, 2));
    return IndObject::algebraic(x.base(), x.index(), std::move(algebras), std::move(arrows));
}

}  // namespace

IndObject ind_apply_functor(const std::string& tag, const IndObject& x) {
    if (x.base() == BaseKind::APOLY) {
        std::map<std::string, int> arities;
        for (const auto& [obj, n] : x.arities())
            arities.emplace(obj, apply_arity_functor(tag, n));
        std::map<std::string, PolyMap> arrows;
        for (const auto& [name, f] : x.poly_arrows())
            arrows.emplace(name, apply_poly_functor(tag, f));
        return IndObject::apoly(x.index(), x.rig(), std::move(arities), std::move(arrows));
    }
    std::map<std::string, PresentedAlgebra> algebras;
    for (const auto& [obj, b] : x.algebras())
        algebras.emplace(obj, apply_algebra_functor(tag, b));
    std::map<std::string, AlgebraHom> arrows;
    for (const auto& [name, h] : x.hom_arrows())
        arrows.emplace(name, apply_hom_functor(tag, h));
    return IndObject::algebraic(x.base(), x.index(), std::move(algebras), std::move(arrows));
}

IndMorphismSame ind_apply_functor(const std::string& tag, const IndMorphismSame& rho) {
    IndObject src = ind_apply_functor(tag, rho.source());
    IndObject dst = ind_apply_functor(tag, rho.target());
    if (rho.source().base() == BaseKind::APOLY) {
        std::map<std::string, PolyMap> fam;
        for (const auto& obj : rho.source().index().objects())
            fam.emplace(obj, apply_poly_functor(tag, rho.poly_at(obj)));
        return IndMorphismSame::of_polys(std::move(src), std::move(dst), std::move(fam));
    }
    std::map<std::string, AlgebraHom> fam;
    for (const auto& obj : rho.source().index().objects())
        fam.emplace(obj, apply_hom_functor(tag, rho.hom_at(obj)));
    return IndMorphismSame::of_homs(std::move(src), std::move(dst), std::move(fam));
}

IndMorphismSame ind_apply_nat(const std::string& tag, const IndObject& x) {
    if (x.base() == BaseKind::APOLY) {
        std::map<std::string, PolyMap> fam;
        for (const auto& obj : x.index().objects()) {
            TangentStructureMaps s = tangent_structure_maps(x.rig(), x.arity_at(obj));
            if (tag == "p") fam.emplace(obj, s.p);
            else if (tag == "zero") fam.emplace(obj, s.zero);
            else if (tag == "plus") fam.emplace(obj, s.plus);
            else if (tag == "ell") fam.emplace(obj, s.ell);
            else if (tag == "flip") fam.emplace(obj, s.flip);
            else throw TancatError("unregistered natural transformation: " + tag);
        }
        IndObject t = ind_apply_functor("T", x);
        if (tag == "p") return IndMorphismSame::of_polys(t, x, std::move(fam));
        if (tag == "zero") return IndMorphismSame::of_polys(x, t, std::move(fam));
        if (tag == "plus")
            return IndMorphismSame::of_polys(fiber_square_diagram(x), t, std::move(fam));
        IndObject tt = ind_apply_functor("TT", x);
        if (tag == "ell") return IndMorphismSame::of_polys(t, tt, std::move(fam));
        return IndMorphismSame::of_polys(tt, tt, std::move(fam));
    }
    std::map<std::string, AlgebraHom> fam;
    for (const auto& obj : x.index().objects()) {
        ZariskiStructureMaps s = structure_maps(x.algebra_at(obj));
        if (tag == "p") fam.emplace(obj, s.q);
        else if (tag == "zero") fam.emplace(obj, s.zeta);
        else if (tag == "plus") fam.emplace(obj, s.add);
        else if (tag == "ell") fam.emplace(obj, s.v);
        else if (tag == "flip") fam.emplace(obj, s.gamma);
        else throw TancatError("unregistered natural transformation: " + tag);
    }
    IndObject t = ind_apply_functor("T", x);
    bool op = x.base() == BaseKind::ALG_OP;
    if (tag == "p")
        return op ? IndMorphismSame::of_homs(t, x, std::move(fam))
                  : IndMorphismSame::of_homs(x, t, std::move(fam));
    if (tag == "zero")
        return op ? IndMorphismSame::of_homs(x, t, std::move(fam))
                  : IndMorphismSame::of_homs(t, x, std::move(fam));
    if (tag == "plus") {
        IndObject w = fiber_square_diagram(x);
        return op ? IndMorphismSame::of_homs(std::move(w), t, std::move(fam))
                  : IndMorphismSame::of_homs(t, std::move(w), std::move(fam));
    }
    IndObject tt = ind_apply_functor("TT", x);
    if (tag == "ell")
        return op ? IndMorphismSame::of_homs(t, std::move(tt), std::move(fam))
                  : IndMorphismSame::of_homs(std::move(tt), t, std::move(fam));
    return IndMorphismSame::of_homs(tt, tt, std::move(fam));
}

IndObject ind_pullback(const IndMorphismSame& f, const IndMorphismSame& g) {
    const IndObject& base =
        f.source().base() == BaseKind::ALG ? f.source() : f.target();
    IndMorphismSame canonical = ind_apply_nat("p", base);
    if (f != canonical || g != canonical)
        throw TancatError("unsupported base construction");
    return fiber_square_diagram(base);
}

DiffObjectResult diff_object_check(const IndObject& x) {
    if (x.base() != BaseKind::APOLY)
        throw TancatError("differential object detection needs a polynomial diagram");
    for (const auto& a : x.index().arrows())
        if (!is_dlinear(x.poly_arrows().at(a.name))) return {false, a.name};
    return {true, ""};
}

FormalSpf formal_spf(int n) {
    if (n < 1) throw TancatError("truncation level must be at least 1");
    std::vector<std::string> objects;
    std::vector<QuiverArrow> arrows;
    for (int k = 1; k <= n; ++k) objects.push_back(std::to_string(k));
    for (int k = 1; k < n; ++k)
        arrows.push_back({"u" + std::to_string(k), std::to_string(k), std::to_string(k + 1)});
    FiniteCategory chain = FiniteCategory::from_quiver(objects, arrows);

    auto level = [&](int k) {
        Polynomial t = Polynomial::variable(Rig::RAT, "t");
        Polynomial rel = t;
        for (int d = 1; d < k; ++d) rel = rel.mul(t);
        return PresentedAlgebra(Rig::RAT, {"t"}, {rel});
    };
    std::map<std::string, PresentedAlgebra> algebras;
    for (int k = 1; k <= n; ++k) algebras.emplace(std::to_string(k), level(k));
    std::map<std::string, AlgebraHom> homs;
    for (int k = 1; k < n; ++k) {
        std::map<std::string, Polynomial> images{{"t", Polynomial::variable(Rig::RAT, "t")}};
        homs.emplace("u" + std::to_string(k), AlgebraHom(level(k + 1), level(k), images));
    }
    IndObject scheme =
        IndObject::algebraic(BaseKind::ALG_OP, chain, std::move(algebras), std::move(homs));
    IndObject tangent = ind_apply_functor("T", scheme);
    return {std::move(scheme), std::move(tangent)};
}

namespace {

void merge_with_suffix(Report& into, const Report& from, const std::string& suffix,
                       bool drop_naturality) {
    for (const auto& item : from.items) {
        if (drop_naturality && item.name.rfind("naturality:", 0) == 0) continue;
        into.items.push_back({item.name + suffix, item.passed, item.witness});
    }
}

}  // namespace

Report check_ind_tangent_axioms(const IndObject& x) {
    Report report;
    if (x.base() == BaseKind::APOLY) {
        for (const auto& obj : x.index().objects()) {
            Report level = check_tangent_axioms(x.rig(), x.arity_at(obj), 0, 0);
            merge_with_suffix(report, level, " (level " + obj + ")", true);
        }
        auto add_eq = [&](const std::string& name, const PolyMap& lhs, const PolyMap& rhs,
                          const std::string& arrow) {
            report.add(name + " (arrow " + arrow + ")", lhs == rhs,
                       "lhs=" + lhs.str() + " rhs=" + rhs.str());
        };
        for (const auto& a : x.index().arrows()) {
            const PolyMap& f = x.poly_arrows().at(a.name);
            TangentStructureMaps si = tangent_structure_maps(x.rig(), x.arity_at(a.src));
            TangentStructureMaps sd = tangent_structure_maps(x.rig(), x.arity_at(a.dst));
            PolyMap tf = tangent_T(f);
            PolyMap ttf = tangent_T(tf);
            add_eq("naturality: p", pm_compose(sd.p, tf), pm_compose(f, si.p), a.name);
            add_eq("naturality: zero", pm_compose(sd.zero, f), pm_compose(tf, si.zero),
                   a.name);
            add_eq("naturality: plus", pm_compose(sd.plus, tangent_T2_map(f)),
                   pm_compose(tf, si.plus), a.name);
            add_eq("naturality: l", pm_compose(sd.ell, tf), pm_compose(ttf, si.ell), a.name);
            add_eq("naturality: c", pm_compose(sd.flip, ttf), pm_compose(ttf, si.flip),
                   a.name);
        }
        if (diff_object_check(x).is_differential) {
            bool ok = true;
            std::string witness;
            for (const auto& a : x.index().arrows()) {
                const PolyMap& f = x.poly_arrows().at(a.name);
                int n = f.src();
                PolyMap doubled = pm_pair(
                    {pm_compose(f, pm_block_projection(x.rig(), 2 * n, 1, n)),
                     pm_compose(f, pm_block_projection(x.rig(), 2 * n, n + 1, n))});
                if (tangent_T(f) != doubled) {
                    ok = false;
                    witness = "arrow " + a.name;
                    break;
                }
            }
            report.add("differential object: T(f) = f x f", ok, witness);
        }
        return report;
    }
    for (const auto& obj : x.index().objects()) {
        std::vector<AlgebraHom> transitions;
        for (const auto& a : x.index().arrows()) {
            const std::string& ring_src = x.base() == BaseKind::ALG ? a.src : a.dst;
            if (ring_src == obj) transitions.push_back(x.hom_arrows().at(a.name));
        }
        Report level = check_zariski_axioms(x.algebra_at(obj), transitions);
        merge_with_suffix(report, level, " (level " + obj + ")", false);
    }
    return report;
}

}  // namespace tancat
