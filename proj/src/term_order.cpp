#include "tancat/term_order.hpp"

#include <algorithm>

namespace tancat {

TermOrder::TermOrder(OrderKind kind, std::vector<std::string> priority)
    : kind_(kind), priority_(std::move(priority)) {
    for (size_t i = 0; i < priority_.size(); ++i) {
        auto [it, fresh] = pos_.emplace(priority_[i], static_cast<int>(i));
        if (!fresh) throw TancatError("duplicate variable in term order: " + priority_[i]);
    }
}

std::vector<int> TermOrder::exponent_vector(const Monomial& m) const {
    std::vector<int> v(priority_.size(), 0);
    for (const auto& [name, e] : m.exponents()) {
        auto it = pos_.find(name);
        if (it == pos_.end())
            throw TancatError("variable not covered by term order: " + name);
        v[static_cast<size_t>(it->second)] = e;
    }
    return v;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    const std::vector<int> u = exponent_vector(a);
    const std::vector<int> w = exponent_vector(b);
    if (kind_ == OrderKind::LEX) {
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i] != w[i]) return u[i] < w[i];
        return false;
    }
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = u.size(); i-- > 0;)
        if (u[i] != w[i]) return u[i] > w[i];
    return false;
}

Monomial TermOrder::leading_monomial(const Polynomial& f) const {
    return leading_term(f).first;
}

std::pair<Monomial, RigScalar> TermOrder::leading_term(const Polynomial& f) const {
    if (f.is_zero()) throw TancatError("leading term of the zero polynomial");
    const auto* best = &*f.terms().begin();
    for (const auto& t : f.terms())
        if (less(best->first, t.first)) best = &t;
    return {best->first, best->second};
}

std::vector<std::pair<Monomial, RigScalar>> TermOrder::sorted_terms(const Polynomial& f) const {
    std::vector<std::pair<Monomial, RigScalar>> ts(f.terms().begin(), f.terms().end());
    std::sort(ts.begin(), ts.end(), [this](const auto& x, const auto& y) {
        return greater(x.first, y.first);
    });
    return ts;
}

}  // namespace tancat
