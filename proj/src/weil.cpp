#include "tancat/weil.hpp"

#include <algorithm>

namespace tancat {

namespace {

std::string block_prefix(size_t b) {
    static const char letters[] = {'x', 'y', 'z', 'u', 'v', 'w'};
    if (b < 6) return std::string(1, letters[b]);
    return "g" + std::to_string(b + 1);
}

std::vector<std::string> block_generators(size_t b, int size) {
    std::vector<std::string> out;
    if (size == 1) {
        out.push_back(block_prefix(b));
        return out;
    }
    for (int i = 1; i <= size; ++i)
        out.push_back(block_prefix(b) + std::to_string(i));
    return out;
}

PresentedAlgebra realize(const std::vector<int>& blocks) {
    std::vector<std::string> gens;
    std::vector<Polynomial> rels;
    for (size_t b = 0; b < blocks.size(); ++b) {
        std::vector<std::string> block = block_generators(b, blocks[b]);
        // All within-block degree-2 monomials x_i*x_j with i <= j.
        for (size_t i = 0; i < block.size(); ++i) {
            for (size_t j = i; j < block.size(); ++j) {
                rels.push_back(Polynomial::term(
                    RigScalar::one(Rig::NAT),
                    Monomial::var(block[i]).mul(Monomial::var(block[j]))));
            }
        }
        gens.insert(gens.end(), block.begin(), block.end());
    }
    return PresentedAlgebra(Rig::NAT, std::move(gens), std::move(rels));
}

}  // namespace

WeilObject::WeilObject(std::vector<int> blocks)
    : blocks_(std::move(blocks)), realized_(realize(blocks_)) {
    for (int n : blocks_) {
        if (n <= 0) throw TancatError("block sizes must be positive");
    }
}

std::string WeilObject::str() const {
    std::string out = "W[";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(blocks_[i]);
    }
    return out + "]";
}

WeilObject weil_generate(int n) {
    if (n < 0) throw TancatError("negative block size");
    if (n == 0) return WeilObject({});
    return WeilObject({n});
}

WeilObject weil_tensor(const WeilObject& v, const WeilObject& w) {
    std::vector<int> blocks = v.blocks();
    blocks.insert(blocks.end(), w.blocks().begin(), w.blocks().end());
    return WeilObject(std::move(blocks));
}

WeilObject weil_parse(const std::string& text) {
    if (text.size() < 3 || text.substr(0, 2) != "W[" || text.back() != ']')
        throw TancatError("expected W[a,b,...]: " + text);
    std::string inner = text.substr(2, text.size() - 3);
    std::vector<int> blocks;
    if (!inner.empty()) {
        size_t start = 0;
        while (start <= inner.size()) {
            size_t comma = inner.find(',', start);
            std::string tok = inner.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                            [](char c) { return c >= '0' && c <= '9'; }))
                throw TancatError("bad block size in " + text);
            int n = std::stoi(tok);
            if (n > 0) blocks.push_back(n);  // W[0] is the unit: contributes nothing
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return WeilObject(std::move(blocks));
}

bool weil_morphism_check(const AlgebraHom& phi) {
    if (!hom_well_defined(phi)) return false;
    for (const auto& g : phi.source().generators()) {
        if (!phi.image(g).constant_term().is_zero()) return false;
    }
    return true;
}

RigScalar augmentation(const WeilObject& w, const Polynomial& element) {
    for (const auto& v : element.variables()) {
        if (!w.realized().has_generator(v))
            throw TancatError("unknown generator in element: " + v);
    }
    return element.constant_term();
}

}  // namespace tancat
