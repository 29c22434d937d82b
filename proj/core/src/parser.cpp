#include "dioph/polynomial.hpp"

#include <cctype>

namespace dioph {

parse_error::parse_error(const std::string& message, size_t pos)
    : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    polynomial run() {
        polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    polynomial parse_expr() {
        polynomial p = parse_term();
        for (;;) {
            if (consume('+')) p = p + parse_term();
            else if (consume('-')) p = p - parse_term();
            else return p;
        }
    }

    polynomial parse_term() {
        polynomial p = parse_factor();
        while (consume('*')) p = p * parse_factor();
        return p;
    }

    polynomial parse_factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (c == '(') {
            ++pos_;
            polynomial p = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return polynomial::constant(parse_integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = parse_identifier();
            unsigned exp = 1;
            if (consume('^')) exp = parse_natural();
            return polynomial::variable(name).pow(exp);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    Integer parse_integer() {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) fail("expected integer");
        return Integer(digits);
    }

    unsigned parse_natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected exponent");
        Integer n = parse_integer();
        if (!n.fits_uint_p()) fail("exponent too large");
        return static_cast<unsigned>(n.get_ui());
    }

    std::string parse_identifier() {
        skip_ws();
        std::string name;
        name += text_[pos_++];
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++pos_;
            } else {
                break;
            }
        }
        return name;
    }
};

}  // namespace

polynomial parse_polynomial(std::string_view text) {
    return parser(text).run();
}

}  // namespace dioph
