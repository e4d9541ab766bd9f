#include "tancat/scalar.hpp"

namespace tancat {

std::string rig_name(Rig r) {
    switch (r) {
        case Rig::NAT: return "N";
        case Rig::INT: return "Z";
        case Rig::RAT: return "Q";
    }
    throw TancatError("unknown rig tag");
}

Rig rig_from_name(const std::string& name) {
    if (name == "N") return Rig::NAT;
    if (name == "Z") return Rig::INT;
    if (name == "Q") return Rig::RAT;
    throw RigError("unknown rig name: " + name);
}

RigScalar RigScalar::of_int(Rig r, const BigInt& v) {
    if (r == Rig::NAT && v < 0) throw RigError("negative value under N");
    return RigScalar(r, BigRat(v));
}

RigScalar RigScalar::fraction(const BigInt& num, const BigInt& den) {
    if (den == 0) throw RigError("zero denominator");
    return RigScalar(Rig::RAT, BigRat(num, den));
}

bool RigScalar::is_integral() const {
    return boost::multiprecision::denominator(v_) == 1;
}

void RigScalar::check_same(const RigScalar& o) const {
    if (rig_ != o.rig_)
        throw RigError("rig mismatch: " + rig_name(rig_) + " vs " + rig_name(o.rig_));
}

RigScalar RigScalar::add(const RigScalar& o) const {
    check_same(o);
    return RigScalar(rig_, BigRat(v_ + o.v_));
}

RigScalar RigScalar::mul(const RigScalar& o) const {
    check_same(o);
    return RigScalar(rig_, BigRat(v_ * o.v_));
}

RigScalar RigScalar::sub(const RigScalar& o) const {
    check_same(o);
    if (rig_ == Rig::NAT) throw RigError("subtraction is not available under N");
    return RigScalar(rig_, BigRat(v_ - o.v_));
}

RigScalar RigScalar::neg() const {
    if (rig_ == Rig::NAT) throw RigError("negation is not available under N");
    return RigScalar(rig_, BigRat(-v_));
}

RigScalar RigScalar::div(const RigScalar& o) const {
    check_same(o);
    if (rig_ != Rig::RAT) throw RigError("division requires Q");
    if (o.v_ == 0) throw RigError("division by zero");
    return RigScalar(rig_, BigRat(v_ / o.v_));
}

RigScalar RigScalar::convert(Rig to) const {
    if (to == rig_) return *this;
    bool widening = (rig_ == Rig::NAT && (to == Rig::INT || to == Rig::RAT)) ||
                    (rig_ == Rig::INT && to == Rig::RAT);
    if (!widening)
        throw RigError("no conversion " + rig_name(rig_) + " -> " + rig_name(to));
    return RigScalar(to, v_);
}

bool RigScalar::operator<(const RigScalar& o) const {
    if (rig_ != o.rig_) return rig_ < o.rig_;
    return v_ < o.v_;
}

std::string RigScalar::str() const {
    const BigInt num = boost::multiprecision::numerator(v_);
    const BigInt den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace tancat
