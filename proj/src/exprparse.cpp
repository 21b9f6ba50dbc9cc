#include "ga/exprparse.hpp"

#include <cctype>
#include <stdexcept>

namespace ga {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("golden expression: " + what + " at position " +
                                    std::to_string(pos) + " in '" + text + "'");
    }

    GoldenNumber parse_expr() {
        GoldenNumber value = parse_term();
        while (true) {
            if (eat('+'))
                value += parse_term();
            else if (eat('-'))
                value -= parse_term();
            else
                return value;
        }
    }

    GoldenNumber parse_term() {
        GoldenNumber value = parse_factor();
        while (true) {
            if (eat('*'))
                value *= parse_factor();
            else if (eat('/'))
                value = value / parse_factor();
            else
                return value;
        }
    }

    GoldenNumber parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        if (eat('(')) {
            GoldenNumber value = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return value;
        }
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            return GoldenNumber(Rational(Integer(text.substr(start, pos - start))));
        }
        if (std::isalpha((unsigned char)c)) {
            std::size_t start = pos;
            while (pos < text.size() && std::isalnum((unsigned char)text[pos])) ++pos;
            std::string word = text.substr(start, pos - start);
            if (word == "tau") return GoldenNumber::tau();
            if (word == "sigma") return GoldenNumber::sigma();
            if (word == "sqrt5") return GoldenNumber::sqrt5();
            fail("unknown symbol '" + word + "'");
        }
        fail("unexpected character");
    }
};

}  // namespace

GoldenNumber parse_golden_expr(const std::string& text) {
    Parser p{text};
    GoldenNumber value = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return value;
}

}  // namespace ga
