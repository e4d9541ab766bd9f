#pragma once

#include "tancat/term_order.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace tancat {

// Finitely generated ideal in the polynomial rig on an ordered variable
// list. Over N every generator must be a single monic monomial (the only
// N-algebras in scope are Weil algebras). The Groebner completion is
// computed at most once per presentation and shared across copies; the
// cache is invisible to callers.
class IdealPresentation {
public:
    IdealPresentation(Rig rig, std::vector<std::string> vars, std::vector<Polynomial> gens);
    IdealPresentation(Rig rig, std::vector<std::string> vars, std::vector<Polynomial> gens,
                      TermOrder order);

    Rig rig() const { return rig_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const TermOrder& order() const { return order_; }

    bool all_gens_monomial() const;
    // Reduced Groebner basis (Q only), memoized.
    const std::vector<Polynomial>& groebner() const;

    bool operator==(const IdealPresentation& o) const {
        return rig_ == o.rig_ && vars_ == o.vars_ && gens_ == o.gens_ && order_ == o.order_;
    }

private:
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<Polynomial>> gb;
    };

    Rig rig_;
    std::vector<std::string> vars_;
    std::vector<Polynomial> gens_;
    TermOrder order_;
    std::shared_ptr<Cache> cache_;
};

// Full normal form of f modulo basis: no term of the result is divisible by
// any basis leading term. Requires Q, or a basis of monic monomials.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const TermOrder& order);

// Reduced Groebner basis (monic, interreduced, sorted by leading monomial).
std::vector<Polynomial> buchberger(const IdealPresentation& ideal);

bool ideal_member(const Polynomial& f, const IdealPresentation& ideal);

// Termwise divisibility by some generator; sound over any rig.
bool monomial_ideal_member(const Polynomial& f, const std::vector<Monomial>& gens);

// Normal form of f modulo the ideal (same support as ideal_member).
Polynomial normal_form(const Polynomial& f, const IdealPresentation& ideal);

}  // namespace tancat
