#pragma once

// Test-side oracles. Each one recomputes a result along a path disjoint
// from the library code it checks: derivatives come from exact polynomial
// interpolation of evaluations, ideal membership from solving a bounded
// degree linear system. Shared random-instance generators live here too so
// unit and acceptance suites draw identical corpora from a seed.

#include "tancat/ideals.hpp"
#include "tancat/polynomial.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using tancat::BigInt;
using tancat::BigRat;
using tancat::Monomial;
using tancat::Polynomial;
using tancat::Rig;
using tancat::RigScalar;

// Value of the directional derivative of f at point a along v, computed by
// exact finite differences: sample g(t) = f(a + t*v) at deg(f)+1 rational
// nodes, fit the unique polynomial of that degree through the samples, and
// read off the coefficient of t. Never touches partial_derivative.
inline BigRat directional_derivative(const Polynomial& f,
                                     const std::map<std::string, BigRat>& a,
                                     const std::map<std::string, BigRat>& v) {
    const Polynomial fq = f.convert(Rig::RAT);
    const int d = fq.degree();
    if (d <= 0) return BigRat(0);

    std::vector<BigRat> nodes, values;
    for (int k = 0; k <= d; ++k) {
        std::map<std::string, RigScalar> point;
        for (const auto& var : fq.variables()) {
            BigRat base = a.count(var) ? a.at(var) : BigRat(0);
            BigRat dir = v.count(var) ? v.at(var) : BigRat(0);
            BigRat val = base + BigRat(k) * dir;
            point.emplace(var, RigScalar::fraction(numerator(val), denominator(val)));
        }
        nodes.push_back(BigRat(k));
        values.push_back(fq.eval(point).value());
    }

    // Newton divided differences, then expansion to the power basis.
    std::vector<BigRat> dd = values;
    std::vector<BigRat> newton;
    newton.push_back(dd[0]);
    for (int j = 1; j <= d; ++j) {
        for (int k = 0; k <= d - j; ++k)
            dd[k] = (dd[k + 1] - dd[k]) / (nodes[k + j] - nodes[k]);
        newton.push_back(dd[0]);
    }
    std::vector<BigRat> coeff(d + 1, BigRat(0));
    std::vector<BigRat> basis(d + 1, BigRat(0));
    basis[0] = 1;
    for (int j = 0; j <= d; ++j) {
        for (int i = 0; i <= j; ++i) coeff[i] += newton[j] * basis[i];
        if (j < d) {
            // basis *= (t - nodes[j])
            for (int i = j + 1; i > 0; --i)
                basis[i] = basis[i - 1] - nodes[j] * basis[i];
            basis[0] = -nodes[j] * basis[0];
        }
    }
    return coeff[1];
}

// Partial derivative value at a point, as the directional derivative along
// a coordinate direction.
inline BigRat partial_at(const Polynomial& f, const std::string& var,
                         const std::map<std::string, BigRat>& a) {
    std::map<std::string, BigRat> v;
    v[var] = 1;
    return directional_derivative(f, a, v);
}

namespace detail {

inline void enumerate_monomials(const std::vector<std::string>& vars, size_t idx,
                                int budget, Monomial acc, std::vector<Monomial>& out) {
    if (idx == vars.size()) {
        out.push_back(acc);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        Monomial next = e == 0 ? acc : acc.mul(Monomial::var(vars[idx], e));
        enumerate_monomials(vars, idx + 1, budget - e, next, out);
    }
}

}  // namespace detail

// All monomials over vars of total degree <= bound, deterministic order.
inline std::vector<Monomial> monomials_up_to(const std::vector<std::string>& vars,
                                             int bound) {
    std::vector<Monomial> out;
    detail::enumerate_monomials(vars, 0, bound, Monomial::one(), out);
    return out;
}

// Brute-force membership: does f equal sum_i h_i * g_i for multipliers h_i
// of total degree <= multiplier_bound? Coefficient matching gives a linear
// system over Q; solve it exactly by sparse Gaussian elimination. This is
// the independent check for ideal_member (which goes through a completed
// basis instead).
inline bool linear_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const std::vector<std::string>& vars, int multiplier_bound) {
    const Polynomial fq = f.convert(Rig::RAT);
    if (fq.is_zero()) return true;

    std::vector<Monomial> mults = monomials_up_to(vars, multiplier_bound);
    // Column per (generator, multiplier monomial); row per product monomial.
    std::map<Monomial, int> row_of;
    auto row_index = [&](const Monomial& m) {
        auto it = row_of.find(m);
        if (it != row_of.end()) return it->second;
        int id = static_cast<int>(row_of.size());
        row_of.emplace(m, id);
        return id;
    };

    std::vector<std::map<int, BigRat>> cols;
    for (const auto& g : gens) {
        const Polynomial gq = g.convert(Rig::RAT);
        for (const auto& m : mults) {
            std::map<int, BigRat> col;
            for (const auto& [gm, gc] : gq.terms())
                col[row_index(m.mul(gm))] += gc.value();
            cols.push_back(std::move(col));
        }
    }
    std::map<int, BigRat> rhs;
    for (const auto& [fm, fc] : fq.terms()) rhs[row_index(fm)] += fc.value();

    // Transpose to sparse rows augmented with the right-hand side.
    struct Row {
        std::map<int, BigRat> a;
        BigRat b;
    };
    size_t nrows = row_of.size();
    std::vector<Row> rows(nrows);
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, val] : cols[c])
            if (val != 0) rows[r].a[static_cast<int>(c)] = val;
    for (const auto& [r, val] : rhs) rows[r].b = val;

    // Forward elimination with on-the-fly pivot registration: reduce each
    // row against the pivots found so far; a row that empties out with a
    // nonzero right-hand side certifies inconsistency.
    std::map<int, size_t> pivot_row;
    std::vector<Row> pivots;
    for (auto& row : rows) {
        while (!row.a.empty()) {
            int lead = row.a.begin()->first;
            auto it = pivot_row.find(lead);
            if (it == pivot_row.end()) {
                BigRat inv = row.a.begin()->second;
                for (auto& [c, val] : row.a) val /= inv;
                row.b /= inv;
                pivot_row.emplace(lead, pivots.size());
                pivots.push_back(row);
                break;
            }
            const Row& p = pivots[it->second];
            BigRat factor = row.a.begin()->second;
            for (const auto& [c, val] : p.a) {
                auto jt = row.a.find(c);
                BigRat next = (jt == row.a.end() ? BigRat(0) : jt->second) - factor * val;
                if (next == 0) {
                    if (jt != row.a.end()) row.a.erase(jt);
                } else {
                    row.a[c] = next;
                }
            }
            row.b -= factor * p.b;
        }
        if (row.a.empty() && row.b != 0) return false;
    }
    return true;
}

// Filteredness of a quiver that presents a poset (at most one directed
// path between any two objects, no relations): every pair needs a common
// reachable object, and parallel morphism pairs cannot arise. Decided by
// transitive closure over the edge list alone.
inline bool poset_filtered(const std::vector<std::string>& objects,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
    if (objects.empty()) return false;
    auto pos = [&](const std::string& o) {
        for (size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == o) return i;
        return objects.size();
    };
    size_t n = objects.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& [s, d] : edges) reach[pos(s)][pos(d)] = true;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            bool cospan = false;
            for (size_t k = 0; k < n && !cospan; ++k) cospan = reach[i][k] && reach[j][k];
            if (!cospan) return false;
        }
    return true;
}

}  // namespace oracle

namespace testgen {

using tancat::BigInt;
using tancat::BigRat;
using tancat::Monomial;
using tancat::Polynomial;
using tancat::Rig;
using tancat::RigScalar;

// Raw draws with modulo keep the streams identical across platforms;
// std::mt19937_64 output is pinned by the standard, the distributions in
// <random> are not.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline Monomial random_monomial(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                int max_deg) {
    Monomial m;
    int deg = static_cast<int>(draw(rng, max_deg + 1));
    for (int i = 0; i < deg; ++i)
        m = m.mul(Monomial::var(vars[draw(rng, vars.size())]));
    return m;
}

inline RigScalar random_scalar(std::mt19937_64& rng, Rig rig, int span) {
    long mag = 1 + static_cast<long>(draw(rng, span));
    if (rig != Rig::NAT && draw(rng, 2) == 0) mag = -mag;
    return RigScalar::of_int(rig, mag);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, Rig rig,
                                    const std::vector<std::string>& vars, int max_deg,
                                    int max_terms, int coeff_span = 4) {
    Polynomial f = Polynomial::zero(rig);
    int terms = 1 + static_cast<int>(draw(rng, max_terms));
    for (int i = 0; i < terms; ++i) {
        f = f.add(Polynomial::term(random_scalar(rng, rig, coeff_span),
                                   random_monomial(rng, vars, max_deg)));
    }
    return f;
}

inline std::map<std::string, BigRat> random_point(std::mt19937_64& rng,
                                                  const std::vector<std::string>& vars,
                                                  int span) {
    std::map<std::string, BigRat> pt;
    for (const auto& v : vars) {
        long num = static_cast<long>(draw(rng, 2 * span + 1)) - span;
        long den = 1 + static_cast<long>(draw(rng, 3));
        pt[v] = BigRat(num, den);
    }
    return pt;
}

inline std::map<std::string, RigScalar> rat_point(const std::map<std::string, BigRat>& pt) {
    std::map<std::string, RigScalar> out;
    for (const auto& [k, v] : pt)
        out.emplace(k, RigScalar::fraction(numerator(v), denominator(v)));
    return out;
}

}  // namespace testgen
