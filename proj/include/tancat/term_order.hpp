#pragma once

#include "tancat/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace tancat {

enum class OrderKind { GREVLEX, LEX };

// Total multiplicative monomial order with 1 minimal. The priority list
// names the variables from highest to lowest; comparing a monomial that
// mentions a variable outside the list is an error.
class TermOrder {
public:
    TermOrder(OrderKind kind, std::vector<std::string> priority);

    static TermOrder grevlex(std::vector<std::string> priority) {
        return TermOrder(OrderKind::GREVLEX, std::move(priority));
    }
    static TermOrder lex(std::vector<std::string> priority) {
        return TermOrder(OrderKind::LEX, std::move(priority));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<std::string>& priority() const { return priority_; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    // Leading monomial/term under this order; f must be nonzero.
    Monomial leading_monomial(const Polynomial& f) const;
    std::pair<Monomial, RigScalar> leading_term(const Polynomial& f) const;

    // Terms of f, leading first.
    std::vector<std::pair<Monomial, RigScalar>> sorted_terms(const Polynomial& f) const;

    bool operator==(const TermOrder& o) const {
        return kind_ == o.kind_ && priority_ == o.priority_;
    }

private:
    std::vector<int> exponent_vector(const Monomial& m) const;

    OrderKind kind_;
    std::vector<std::string> priority_;
    std::map<std::string, int> pos_;
};

}  // namespace tancat
