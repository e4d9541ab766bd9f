#include "tancat/polynomial.hpp"

#include "tancat/term_order.hpp"

#include <algorithm>

namespace tancat {

Monomial Monomial::var(const std::string& name, int k) {
    if (name.empty()) throw TancatError("empty variable name");
    if (k < 0) throw TancatError("negative exponent");
    Monomial m;
    if (k > 0) m.e_[name] = k;
    return m;
}

int Monomial::exponent(const std::string& name) const {
    auto it = e_.find(name);
    return it == e_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [_, e] : e_) d += e;
    return d;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [name, e] : o.e_) r.e_[name] += e;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [name, e] : e_)
        if (o.exponent(name) < e) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& num, const Monomial& den) {
    Monomial r;
    for (const auto& [name, e] : num.e_) {
        const int d = e - den.exponent(name);
        if (d < 0) throw TancatError("monomial quotient is not exact");
        if (d > 0) r.e_[name] = d;
    }
    for (const auto& [name, e] : den.e_)
        if (num.exponent(name) < e) throw TancatError("monomial quotient is not exact");
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [name, e] : b.e_) {
        int& slot = r.e_[name];
        slot = std::max(slot, e);
    }
    return r;
}

std::string Monomial::str(const std::vector<std::string>* var_order) const {
    if (e_.empty()) return "1";
    std::vector<std::string> names;
    names.reserve(e_.size());
    if (var_order) {
        for (const auto& v : *var_order)
            if (e_.count(v)) names.push_back(v);
        for (const auto& [name, _] : e_)
            if (std::find(var_order->begin(), var_order->end(), name) == var_order->end())
                names.push_back(name);
    } else {
        for (const auto& [name, _] : e_) names.push_back(name);
    }
    std::string out;
    for (const auto& name : names) {
        if (!out.empty()) out += "*";
        out += name;
        const int e = e_.at(name);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

Polynomial Polynomial::constant(const RigScalar& c) {
    Polynomial p(c.rig());
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(Rig r, const std::string& name) {
    Polynomial p(r);
    p.add_term(Monomial::var(name), RigScalar::one(r));
    return p;
}

Polynomial Polynomial::term(const RigScalar& c, const Monomial& m) {
    Polynomial p(c.rig());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, _] : terms_) d = std::max(d, m.degree());
    return d;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> vs;
    for (const auto& [m, _] : terms_)
        for (const auto& [name, e] : m.exponents()) vs.insert(name);
    return vs;
}

RigScalar Polynomial::constant_term() const {
    return coefficient(Monomial::one());
}

RigScalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RigScalar::zero(rig_) : it->second;
}

void Polynomial::add_term(const Monomial& m, const RigScalar& c) {
    if (c.rig() != rig_) throw RigError("coefficient rig mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    const RigScalar s = it->second.add(c);
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

Polynomial Polynomial::add(const Polynomial& o) const {
    if (rig_ != o.rig_) throw RigError("polynomial rig mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::neg() const {
    if (rig_ == Rig::NAT) throw RigError("negation is not available under N");
    Polynomial r(rig_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.neg());
    return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const {
    if (rig_ == Rig::NAT || o.rig_ == Rig::NAT)
        throw RigError("subtraction is not available under N");
    return add(o.neg());
}

Polynomial Polynomial::mul(const Polynomial& o) const {
    if (rig_ != o.rig_) throw RigError("polynomial rig mismatch");
    Polynomial r(rig_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.mul(mb), ca.mul(cb));
    return r;
}

Polynomial Polynomial::scale(const RigScalar& c) const {
    if (c.rig() != rig_) throw RigError("scalar rig mismatch");
    Polynomial r(rig_);
    for (const auto& [m, k] : terms_) r.add_term(m, k.mul(c));
    return r;
}

Polynomial Polynomial::sub_term(const Monomial& m, const RigScalar& c) const {
    auto it = terms_.find(m);
    if (it == terms_.end() || !(it->second == c))
        throw TancatError("sub_term: no exactly matching term");
    Polynomial r = *this;
    r.terms_.erase(m);
    return r;
}

Polynomial Polynomial::partial_derivative(const std::string& var) const {
    Polynomial r(rig_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(var);
        if (e == 0) continue;
        const Monomial lowered = Monomial::quotient(m, Monomial::var(var));
        r.add_term(lowered, c.mul(RigScalar::of_int(rig_, e)));
    }
    return r;
}

RigScalar Polynomial::eval(const std::map<std::string, RigScalar>& point) const {
    RigScalar acc = RigScalar::zero(rig_);
    for (const auto& [m, c] : terms_) {
        RigScalar t = c;
        for (const auto& [name, e] : m.exponents()) {
            auto it = point.find(name);
            if (it == point.end()) throw TancatError("unassigned variable: " + name);
            for (int k = 0; k < e; ++k) t = t.mul(it->second);
        }
        acc = acc.add(t);
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
    Polynomial acc(rig_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(c);
        for (const auto& [name, e] : m.exponents()) {
            auto it = images.find(name);
            if (it == images.end()) throw TancatError("no image for variable: " + name);
            if (it->second.rig() != rig_)
                throw RigError("substitution rig mismatch on variable: " + name);
            for (int k = 0; k < e; ++k) t = t.mul(it->second);
        }
        acc = acc.add(t);
    }
    return acc;
}

Polynomial Polynomial::convert(Rig to) const {
    Polynomial r(to);
    for (const auto& [m, c] : terms_) r.add_term(m, c.convert(to));
    return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (rig_ != o.rig_) return rig_ < o.rig_;
    return terms_ < o.terms_;
}

std::string Polynomial::str(const std::vector<std::string>* var_order) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> priority;
    if (var_order) {
        priority = *var_order;
        for (const auto& v : variables())
            if (std::find(priority.begin(), priority.end(), v) == priority.end())
                priority.push_back(v);
    } else {
        const auto vs = variables();
        priority.assign(vs.begin(), vs.end());
    }
    const TermOrder order = TermOrder::grevlex(priority);
    const auto ts = order.sorted_terms(*this);

    std::string out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        const bool negative = c.is_negative();
        std::string mag;
        const RigScalar abs_c = negative ? c.neg() : c;
        if (m.is_one())
            mag = abs_c.str();
        else if (abs_c.is_one())
            mag = m.str(var_order);
        else
            mag = abs_c.str() + "*" + m.str(var_order);
        if (first) {
            // A leading '-' only parses inside an integer literal, so a
            // negative head with a unit coefficient prints as -1*m.
            if (negative && !m.is_one() && abs_c.is_one())
                out += "-1*" + m.str(var_order);
            else
                out += (negative ? "-" : "") + mag;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += mag;
        }
    }
    return out;
}

}  // namespace tancat
