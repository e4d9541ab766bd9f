#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tancat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Commutative rig the scalars (and everything built on them) live over.
// NAT exposes no negation or subtraction; RAT is the only rig with division.
enum class Rig { NAT, INT, RAT };

std::string rig_name(Rig r);
Rig rig_from_name(const std::string& name);

struct TancatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RigError : TancatError {
    using TancatError::TancatError;
};

// Exact scalar tagged with its rig. Internally a rational; the invariants
// are: NAT => integral and >= 0, INT => integral. All binary operations
// require both operands to carry the same rig tag.
class RigScalar {
public:
    RigScalar() : rig_(Rig::NAT), v_(0) {}

    static RigScalar zero(Rig r) { return RigScalar(r, 0); }
    static RigScalar one(Rig r) { return RigScalar(r, 1); }
    static RigScalar of_int(Rig r, const BigInt& v);
    static RigScalar of_int(Rig r, long v) { return of_int(r, BigInt(v)); }
    static RigScalar fraction(const BigInt& num, const BigInt& den);

    Rig rig() const { return rig_; }
    const BigRat& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_integral() const;

    RigScalar add(const RigScalar& o) const;
    RigScalar mul(const RigScalar& o) const;
    RigScalar sub(const RigScalar& o) const;
    RigScalar neg() const;
    RigScalar div(const RigScalar& o) const;

    // Widening only: NAT -> INT -> RAT (identity conversions allowed).
    RigScalar convert(Rig to) const;

    bool operator==(const RigScalar& o) const { return rig_ == o.rig_ && v_ == o.v_; }
    bool operator!=(const RigScalar& o) const { return !(*this == o); }
    bool operator<(const RigScalar& o) const;

    std::string str() const;

private:
    RigScalar(Rig r, BigRat v) : rig_(r), v_(std::move(v)) {}
    void check_same(const RigScalar& o) const;

    Rig rig_;
    BigRat v_;
};

}  // namespace tancat
