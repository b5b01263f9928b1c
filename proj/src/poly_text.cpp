#include "chordlab/poly_text.hpp"

#include <cctype>
#include <string>

#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    MVPoly parse() {
        skip_space();
        if (pos_ == text_.size()) {
            fail("empty expression");
        }
        MVPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MVPoly expr() {
        MVPoly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MVPoly term() {
        MVPoly acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                MVPoly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division by a non-constant or zero expression");
                }
                acc *= BigRat(1) / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    MVPoly unary() {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    MVPoly power() {
        MVPoly base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 100000) {
                    fail("exponent too large");
                }
                ++pos_;
            }
            if (pos_ == start) {
                fail("expected natural exponent after '^'");
            }
            return poly_pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    MVPoly primary() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MVPoly inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_++]);
            }
            return MVPoly(BigRat(BigInt(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name.push_back(text_[pos_++]);
            }
            return MVPoly::variable(name);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

} // namespace

MVPoly parse_poly(std::string_view text, std::size_t line) { return PolyParser(text, line).parse(); }

} // namespace chordlab
