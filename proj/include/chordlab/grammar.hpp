#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "chordlab/poly.hpp"

namespace chordlab {

/// Context-free grammar: substitution rules `v -> polynomial`.
/// Variables without a rule are constants for the formal derivative.
class Grammar {
  public:
    using Rules = std::map<std::string, MVPoly, std::less<>>;

    Grammar() = default;
    explicit Grammar(Rules rules) : rules_(std::move(rules)) {}

    /// Throws DuplicateRule if `var` already has a rule.
    void add_rule(std::string var, MVPoly rhs, std::size_t line = 0);
    /// nullptr when `var` is unruled.
    const MVPoly* rule(std::string_view var) const;
    const Rules& rules() const noexcept { return rules_; }

    std::string to_string() const;

  private:
    Rules rules_;
};

/// D_G(p) = sum_v (dp/dv) * rules(v).
MVPoly d_apply(const Grammar& g, const MVPoly& p);
/// n-fold application of d_apply; d_iter(g, p, 0) = p.
MVPoly d_iter(const Grammar& g, const MVPoly& p, unsigned n);

/// Parses the rule-file format: one `var -> polynomial` per line, `#`
/// comments, blank lines ignored.
Grammar parse_grammar(std::string_view text);

namespace grammars {

/// {a -> ab, b -> b}: D^n(a) = a sum_k S(n,k) b^k.
Grammar stirling_second_kind();
/// {a -> ab, b -> ab}: D^n(a) = a b^n A_n(a/b).
Grammar eulerian();
/// {I -> Ipq, p -> xy, x -> xy, y -> xy, q -> 0}: the (exc, drop, fix, cyc) grammar.
Grammar permutation_quadruple();
/// {J -> Jst, s -> 2ab, a -> 2ab, b -> 2ab, t -> 0}: the matching (elblock, olblock, fixb, trace) grammar.
Grammar matching_quadruple();
/// Seven-rule grammar over I, x1, x2, x3, y1, y2, E generating neighbor polynomials.
Grammar neighbor();
/// {a -> a w1, w1 -> 2 w2, w2 -> w1 w2 + 3 w3, w3 -> 2 w1 w3}.
Grammar neighbor_symmetric();
/// {x -> xyz, y -> xyz, z -> xyz}: D^n(x) = Q_n(x, y, z).
Grammar stirling_trivariate();
/// {u -> 3w, v -> 2uw, w -> vw}: the elementary-symmetric form of the above.
Grammar stirling_symmetric();

} // namespace grammars

} // namespace chordlab
