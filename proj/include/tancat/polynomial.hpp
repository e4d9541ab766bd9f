#pragma once

#include "tancat/scalar.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tancat {

// Power product over named variables; exponents are strictly positive
// (absent variable = exponent 0, empty map = the monomial 1).
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(const std::string& name, int k = 1);

    const std::map<std::string, int>& exponents() const { return e_; }
    int exponent(const std::string& name) const;
    int degree() const;
    bool is_one() const { return e_.empty(); }

    Monomial mul(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // pre: divides(o) holds for *this -> o/this
    static Monomial quotient(const Monomial& num, const Monomial& den);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; }  // structural, for map keys

    // Factors ordered by position in var_order (unknown names go last,
    // alphabetically); nullptr = ascending name order.
    std::string str(const std::vector<std::string>* var_order = nullptr) const;

private:
    std::map<std::string, int> e_;
};

// Canonical multivariate polynomial over a rig: a finite map from monomials
// to nonzero coefficients. Two polynomials are equal iff rig and term maps
// coincide.
class Polynomial {
public:
    explicit Polynomial(Rig r) : rig_(r) {}

    static Polynomial zero(Rig r) { return Polynomial(r); }
    static Polynomial constant(const RigScalar& c);
    static Polynomial variable(Rig r, const std::string& name);
    static Polynomial term(const RigScalar& c, const Monomial& m);

    Rig rig() const { return rig_; }
    const std::map<Monomial, RigScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int degree() const;  // total degree, -1 for the zero polynomial
    std::set<std::string> variables() const;
    RigScalar constant_term() const;
    RigScalar coefficient(const Monomial& m) const;

    Polynomial add(const Polynomial& o) const;
    Polynomial sub(const Polynomial& o) const;
    Polynomial neg() const;
    Polynomial mul(const Polynomial& o) const;
    Polynomial scale(const RigScalar& c) const;
    // Remove one exact term. The coefficient must match the stored one, so
    // this is cancellation, not subtraction, and stays legal under N.
    Polynomial sub_term(const Monomial& m, const RigScalar& c) const;

    Polynomial partial_derivative(const std::string& var) const;
    RigScalar eval(const std::map<std::string, RigScalar>& point) const;
    // Every variable of *this must have an image; images must share the rig.
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const;
    Polynomial convert(Rig to) const;

    bool operator==(const Polynomial& o) const {
        return rig_ == o.rig_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const;  // deterministic total order

    // Terms printed in descending graded reverse lexicographic order with
    // variable priority given by var_order (nullptr = sorted names).
    std::string str(const std::vector<std::string>* var_order = nullptr) const;

private:
    void add_term(const Monomial& m, const RigScalar& c);

    Rig rig_;
    std::map<Monomial, RigScalar> terms_;
};

}  // namespace tancat
