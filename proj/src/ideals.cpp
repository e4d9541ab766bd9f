#include "tancat/ideals.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tancat {

namespace {

// Pick the term order for a presentation: grevlex on the given variable
// list, extended with any variables the generators mention beyond it.
TermOrder default_order(const std::vector<std::string>& vars,
                        const std::vector<Polynomial>& gens) {
    std::vector<std::string> priority = vars;
    for (const auto& g : gens) {
        for (const auto& v : g.variables()) {
            if (std::find(priority.begin(), priority.end(), v) == priority.end())
                priority.push_back(v);
        }
    }
    return TermOrder::grevlex(priority);
}

Polynomial make_monic(const Polynomial& f, const TermOrder& order) {
    RigScalar lc = f.terms().at(order.leading_monomial(f));
    if (lc.is_one()) return f;
    return f.scale(RigScalar::one(f.rig()).div(lc));
}

bool is_monic_monomial(const Polynomial& f) {
    return f.is_monomial() && f.terms().begin()->second.is_one();
}

}  // namespace

IdealPresentation::IdealPresentation(Rig rig, std::vector<std::string> vars,
                                     std::vector<Polynomial> gens)
    : IdealPresentation(rig, vars, gens, default_order(vars, gens)) {}

IdealPresentation::IdealPresentation(Rig rig, std::vector<std::string> vars,
                                     std::vector<Polynomial> gens, TermOrder order)
    : rig_(rig), vars_(std::move(vars)), order_(std::move(order)),
      cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.rig() != rig_) throw RigError("ideal generator rig mismatch");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

bool IdealPresentation::all_gens_monomial() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_monomial(); });
}

const std::vector<Polynomial>& IdealPresentation::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) cache_->gb = buchberger(*this);
    return *cache_->gb;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const TermOrder& order) {
    Polynomial remainder = Polynomial::zero(f.rig());
    Polynomial work = f;
    while (!work.is_zero()) {
        Monomial lm = order.leading_monomial(work);
        RigScalar lc = work.terms().at(lm);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            Monomial glm = order.leading_monomial(g);
            if (!glm.divides(lm)) continue;
            RigScalar glc = g.terms().at(glm);
            // Subtract (lc/glc)*quot*g; needs subtraction/division, so the
            // non-monomial path is Q only. Over N the callers guarantee
            // monic monomial bases, where g == its leading term and the
            // cancellation is a plain term deletion.
            Monomial quot = Monomial::quotient(lm, glm);
            if (f.rig() == Rig::RAT) {
                Polynomial factor = Polynomial::term(lc.div(glc), quot);
                work = work.sub(factor.mul(g));
            } else {
                if (!is_monic_monomial(g))
                    throw TancatError("reduction outside Q needs monic monomial generators");
                work = work.sub_term(lm, lc);
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder = remainder.add(Polynomial::term(lc, lm));
            work = work.sub_term(lm, lc);
        }
    }
    return remainder;
}

std::vector<Polynomial> buchberger(const IdealPresentation& ideal) {
    if (ideal.rig() != Rig::RAT)
        throw TancatError("Groebner bases are computed over Q only");
    const TermOrder& order = ideal.order();

    std::vector<Polynomial> basis;
    std::vector<Monomial> lead;
    for (const auto& g : ideal.gens()) {
        Polynomial r = reduce(g, basis, order);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, order));
            lead.push_back(order.leading_monomial(basis.back()));
        }
    }

    // Normal selection: treat pairs with the smallest lcm degree first so
    // low-degree staircase corners appear before high-degree S-polynomials
    // are attempted. Treated pairs feed the chain criterion.
    struct PairEntry {
        int degree;
        size_t i, j;
    };
    auto later = [](const PairEntry& a, const PairEntry& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    };
    std::priority_queue<PairEntry, std::vector<PairEntry>, decltype(later)> queue(later);
    auto push_pair = [&](size_t i, size_t j) {
        queue.push(PairEntry{Monomial::lcm(lead[i], lead[j]).degree(), i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    std::set<std::pair<size_t, size_t>> treated;
    while (!queue.empty()) {
        auto [deg, i, j] = queue.top();
        queue.pop();
        treated.insert({i, j});
        Monomial lcm = Monomial::lcm(lead[i], lead[j]);
        // Coprime leading terms: the S-polynomial reduces to zero.
        if (lcm.degree() == lead[i].degree() + lead[j].degree()) continue;
        // Chain criterion: redundant when a third leading term divides the
        // lcm and both side pairs are already treated.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j || !lead[k].divides(lcm)) continue;
            chained = treated.count({std::min(i, k), std::max(i, k)}) &&
                      treated.count({std::min(j, k), std::max(j, k)});
        }
        if (chained) continue;
        Polynomial si = Polynomial::term(RigScalar::one(Rig::RAT), Monomial::quotient(lcm, lead[i]));
        Polynomial sj = Polynomial::term(RigScalar::one(Rig::RAT), Monomial::quotient(lcm, lead[j]));
        Polynomial s = si.mul(basis[i]).sub(sj.mul(basis[j]));
        Polynomial r = reduce(s, basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        lead.push_back(order.leading_monomial(basis.back()));
        for (size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    // Interreduce: drop elements whose leading term another leading term
    // divides, then fully reduce each survivor by the others.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Monomial lmi = order.leading_monomial(basis[i]);
        bool drop = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            Monomial lmj = order.leading_monomial(basis[j]);
            if (lmj.divides(lmi) && !(lmj == lmi && j > i)) {
                drop = true;
                break;
            }
        }
        if (!drop) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(make_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return order.greater(order.leading_monomial(a), order.leading_monomial(b));
              });
    return reduced;
}

bool monomial_ideal_member(const Polynomial& f, const std::vector<Monomial>& gens) {
    if (f.is_zero()) return true;
    for (const auto& [mono, coeff] : f.terms()) {
        bool divisible = false;
        for (const auto& g : gens) {
            if (g.divides(mono)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) return false;
    }
    return true;
}

namespace {

// Monomial fast path applies when every generator is a single term. Off Q
// the generator coefficients must be 1: a termwise divisibility test with
// non-unit coefficients could claim membership no N-combination realizes.
bool monomial_fast_path(const IdealPresentation& ideal, std::vector<Monomial>& out) {
    out.clear();
    for (const auto& g : ideal.gens()) {
        if (!g.is_monomial()) return false;
        if (ideal.rig() != Rig::RAT && !g.terms().begin()->second.is_one()) return false;
        out.push_back(g.terms().begin()->first);
    }
    return true;
}

}  // namespace

bool ideal_member(const Polynomial& f, const IdealPresentation& ideal) {
    if (f.rig() != ideal.rig()) throw RigError("membership query rig mismatch");
    if (f.is_zero()) return true;
    std::vector<Monomial> monos;
    if (monomial_fast_path(ideal, monos)) return monomial_ideal_member(f, monos);
    if (ideal.rig() != Rig::RAT)
        throw TancatError("ideal membership outside Q needs monomial generators");
    return reduce(f, ideal.groebner(), ideal.order()).is_zero();
}

Polynomial normal_form(const Polynomial& f, const IdealPresentation& ideal) {
    if (f.rig() != ideal.rig()) throw RigError("normal form rig mismatch");
    std::vector<Monomial> monos;
    if (monomial_fast_path(ideal, monos)) {
        Polynomial out = Polynomial::zero(f.rig());
        for (const auto& [mono, coeff] : f.terms()) {
            bool divisible = false;
            for (const auto& g : monos) {
                if (g.divides(mono)) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) out = out.add(Polynomial::term(coeff, mono));
        }
        return out;
    }
    if (ideal.rig() != Rig::RAT)
        throw TancatError("normal forms outside Q need monomial generators");
    return reduce(f, ideal.groebner(), ideal.order());
}

}  // namespace tancat
