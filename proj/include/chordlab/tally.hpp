#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chordlab/poly.hpp"

namespace chordlab {

/// Integer-count histogram of exponent vectors over a fixed variable list.
/// Accumulates generating polynomials of statistics without building an
/// MVPoly per object. Up to 8 variables with exponents below 256.
class Tally {
  public:
    explicit Tally(std::vector<std::string> vars);

    void add(std::span<const unsigned> exponents, std::uint64_t count = 1);
    void add(std::initializer_list<unsigned> exponents, std::uint64_t count = 1) {
        add(std::span<const unsigned>(exponents.begin(), exponents.size()), count);
    }
    void merge(const Tally& other);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::uint64_t total() const noexcept { return total_; }
    MVPoly to_poly() const;

  private:
    std::vector<std::string> vars_;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

} // namespace chordlab
