#include "chordlab/grammar.hpp"

#include <cctype>

#include "chordlab/errors.hpp"
#include "chordlab/poly_text.hpp"

namespace chordlab {

void Grammar::add_rule(std::string var, MVPoly rhs, std::size_t line) {
    if (rules_.contains(var)) {
        throw DuplicateRule(var, line);
    }
    rules_.emplace(std::move(var), std::move(rhs));
}

const MVPoly* Grammar::rule(std::string_view var) const {
    auto it = rules_.find(var);
    return it == rules_.end() ? nullptr : &it->second;
}

std::string Grammar::to_string() const {
    std::string out;
    for (const auto& [v, rhs] : rules_) {
        out += v + " -> " + rhs.to_string() + "\n";
    }
    return out;
}

MVPoly d_apply(const Grammar& g, const MVPoly& p) {
    MVPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [var, e] : m.factors()) {
            const MVPoly* rhs = g.rule(var);
            if (rhs == nullptr || rhs->is_zero()) {
                continue;
            }
            const Monomial rest = m.with_exponent(var, e - 1);
            const BigRat scale = c * BigRat(static_cast<long>(e));
            for (const auto& [rm, rc] : rhs->terms()) {
                out.add_term(rest * rm, scale * rc);
            }
        }
    }
    return out;
}

MVPoly d_iter(const Grammar& g, const MVPoly& p, unsigned n) {
    MVPoly cur = p;
    for (unsigned i = 0; i < n; ++i) {
        cur = d_apply(g, cur);
    }
    return cur;
}

Grammar parse_grammar(std::string_view text) {
    Grammar g;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
                ++pos;
            }
        };
        skip();
        if (pos < line.size()) {
            std::size_t name_begin = pos;
            if (!(std::isalpha(static_cast<unsigned char>(line[pos])) || line[pos] == '_')) {
                throw ParseError("expected variable name", line_no, pos + 1);
            }
            while (pos < line.size() && (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_')) {
                ++pos;
            }
            std::string var(line.substr(name_begin, pos - name_begin));
            skip();
            if (line.substr(pos, 2) != "->") {
                throw ParseError("expected '->'", line_no, pos + 1);
            }
            pos += 2;
            std::string_view rhs_text = line.substr(pos);
            MVPoly rhs;
            try {
                rhs = parse_poly(rhs_text, line_no);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), line_no, e.column() + pos);
            }
            g.add_rule(std::move(var), std::move(rhs), line_no);
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return g;
}

namespace grammars {

namespace {
Grammar from_text(std::string_view text) { return parse_grammar(text); }
} // namespace

Grammar stirling_second_kind() { return from_text("a -> a*b\nb -> b"); }

Grammar eulerian() { return from_text("a -> a*b\nb -> a*b"); }

Grammar permutation_quadruple() { return from_text("I -> I*p*q\np -> x*y\nx -> x*y\ny -> x*y\nq -> 0"); }

Grammar matching_quadruple() { return from_text("J -> J*s*t\ns -> 2*a*b\na -> 2*a*b\nb -> 2*a*b\nt -> 0"); }

Grammar neighbor() {
    return from_text("I -> I*x1*y1\n"
                     "x1 -> x1*x2*y1\n"
                     "x2 -> x1*x2*y1\n"
                     "x3 -> x1*x3*y1\n"
                     "y1 -> x3*y1*y2\n"
                     "y2 -> x2*y1*y2\n"
                     "E -> E*x3*y2");
}

Grammar neighbor_symmetric() { return from_text("a -> a*w1\nw1 -> 2*w2\nw2 -> w1*w2 + 3*w3\nw3 -> 2*w1*w3"); }

Grammar stirling_trivariate() { return from_text("x -> x*y*z\ny -> x*y*z\nz -> x*y*z"); }

Grammar stirling_symmetric() { return from_text("u -> 3*w\nv -> 2*u*w\nw -> v*w"); }

} // namespace grammars

} // namespace chordlab
