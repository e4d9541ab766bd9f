#include "tancat/parser.hpp"

#include <cctype>

namespace tancat {

namespace {

class Parser {
public:
    Parser(const std::string& s, Rig rig) : s_(s), rig_(rig) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (i_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool peek_is(char c) {
        skip_ws();
        return i_ < s_.size() && s_[i_] == c;
    }

    bool eat(char c) {
        if (!peek_is(c)) return false;
        ++i_;
        return true;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (eat('+')) {
                acc = acc.add(term());
            } else if (peek_is('-')) {
                if (rig_ == Rig::NAT) fail("'-' is not allowed under N");
                ++i_;
                acc = acc.sub(term());
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc.mul(factor());
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            const long e = natural();
            Polynomial r = Polynomial::constant(RigScalar::one(rig_));
            for (long k = 0; k < e; ++k) r = r.mul(base);
            return r;
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (eat('(')) {
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return Polynomial::variable(rig_, variable());
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(rational());
        fail("expected a rational, a variable or '('");
    }

    std::string variable() {
        skip_ws();
        const size_t start = i_;
        if (i_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[i_])))
            fail("expected a variable");
        ++i_;
        while (i_ < s_.size()) {
            const char c = s_[i_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++i_;
            else
                break;
        }
        return s_.substr(start, i_ - start);
    }

    RigScalar rational() {
        const BigInt num = integer();
        if (eat('/')) {
            if (rig_ != Rig::RAT) fail("fractional literal requires Q");
            const size_t at = i_;
            const BigInt den = digits();
            if (den == 0) throw ParseError("denominator must be positive", at);
            return RigScalar::fraction(num, den);
        }
        return RigScalar::of_int(rig_, num);
    }

    BigInt integer() {
        skip_ws();
        bool negative = false;
        if (peek_is('-')) {
            if (rig_ == Rig::NAT) fail("negative literal under N");
            ++i_;
            negative = true;
        }
        const BigInt v = digits();
        return negative ? BigInt(-v) : v;
    }

    BigInt digits() {
        skip_ws();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            fail("expected digits");
        BigInt v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_] - '0');
            ++i_;
        }
        return v;
    }

    long natural() {
        skip_ws();
        const size_t at = i_;
        const BigInt v = digits();
        if (v > 4096) throw ParseError("exponent too large", at);
        return static_cast<long>(v);
    }

    const std::string& s_;
    Rig rig_;
    size_t i_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, Rig rig) {
    return Parser(text, rig).run();
}

RigScalar parse_scalar(const std::string& text, Rig rig) {
    const Polynomial p = parse_poly(text, rig);
    if (!p.is_constant()) throw TancatError("expected a scalar: " + text);
    return p.constant_term();
}

}  // namespace tancat
