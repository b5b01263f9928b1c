#include "chordlab/tally.hpp"

#include "chordlab/errors.hpp"

namespace chordlab {

Tally::Tally(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.size() > 8) {
        throw Error("Tally supports at most 8 variables");
    }
}

void Tally::add(std::span<const unsigned> exponents, std::uint64_t count) {
    if (exponents.size() != vars_.size()) {
        throw Error("Tally::add arity mismatch");
    }
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 255) {
            throw Error("Tally exponent out of range");
        }
        key |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
    }
    counts_[key] += count;
    total_ += count;
}

void Tally::merge(const Tally& other) {
    if (other.vars_ != vars_) {
        throw Error("Tally::merge variable mismatch");
    }
    for (const auto& [key, c] : other.counts_) {
        counts_[key] += c;
    }
    total_ += other.total_;
}

MVPoly Tally::to_poly() const {
    MVPoly p;
    for (const auto& [key, c] : counts_) {
        std::vector<Monomial::Factor> factors;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto e = static_cast<std::uint32_t>((key >> (8 * i)) & 0xFFU);
            if (e > 0) {
                factors.emplace_back(vars_[i], e);
            }
        }
        p.add_term(Monomial(std::move(factors)), BigRat(BigInt(static_cast<unsigned long>(c))));
    }
    return p;
}

} // namespace chordlab
