#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "divfree/polynomial.hpp"

namespace divfree {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

namespace detail {

// Recursive-descent parser for the expression grammar
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*' factor) | factor)*        (implicit multiplication)
//   factor := base ('^' natural)?
//   base   := rational | variable | '(' expr ')'
// with rationals written p or p/q.
class ExprParser {
public:
    ExprParser(const std::string& text, ContextPtr ctx, std::size_t line_offset = 1)
        : text_(text), ctx_(std::move(ctx)), line_(line_offset) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return p;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    void advance() {
        if (eof()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    bool starts_base() {
        skip_ws();
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_' || c == '(';
    }

    Polynomial parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            advance();
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            advance();
            Polynomial rhs = parse_term();
            acc = (c == '+') ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                advance();
                acc = acc * parse_factor();
            } else if (peek() == '/') {
                fail("division is only allowed inside rational literals p/q");
            } else if (starts_base()) {
                acc = acc * parse_factor();  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        skip_ws();
        if (peek() == '^') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
            unsigned long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(peek() - '0');
                if (e > 4096) fail("exponent too large");
                advance();
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            advance();
            Polynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            advance();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        fail(eof() ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_rational() {
        Integer num = parse_natural();
        skip_ws();
        if (peek() == '/') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("division is only allowed inside rational literals p/q");
            Integer den = parse_natural();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(ctx_, q);
        }
        return Polynomial::constant(ctx_, Rational(num));
    }

    Integer parse_natural() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            advance();
        }
        return Integer(digits);
    }

    Polynomial parse_variable() {
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            name.push_back(peek());
            advance();
        }
        auto idx = ctx_->index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        return Polynomial::variable(ctx_, *idx);
    }

    const std::string& text_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx,
                                   std::size_t line_offset = 1) {
    return detail::ExprParser(text, ctx, line_offset).parse();
}

// Parsed input file: a `vars:` line (optional, default x,y,z), then one of
//   divisor: <expr>
//   lines:       (one linear form per line)
//   ideal:       (one generator per line)
// Blank lines and lines starting with '#' are ignored.
struct InputDocument {
    enum class Kind { Divisor, Arrangement, Ideal };
    Kind kind = Kind::Divisor;
    ContextPtr context;
    std::vector<Polynomial> body;  // [F] for a divisor; forms or generators otherwise
    std::vector<std::string> options;
};

namespace detail {

inline std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    if (!current.empty()) names.push_back(current);
    return names;
}

}  // namespace detail

inline InputDocument parse_input_document(const std::string& text,
                                          const std::vector<std::string>& variable_override = {}) {
    InputDocument doc;
    std::vector<std::string> names = variable_override;

    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::string current;
        std::size_t number = 1;
        for (char c : text) {
            if (c == '\n') {
                lines.emplace_back(number++, current);
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        if (!current.empty()) lines.emplace_back(number, current);
    }

    auto strip = [](std::string s) {
        const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
        while (!s.empty() && is_space(s.front())) s.erase(s.begin());
        while (!s.empty() && is_space(s.back())) s.pop_back();
        return s;
    };

    bool body_started = false;
    bool body_is_list = false;
    std::vector<std::pair<std::size_t, std::string>> body_lines;
    std::optional<std::pair<std::size_t, std::string>> divisor_line;

    for (const auto& [number, raw] : lines) {
        std::string s = strip(raw);
        if (s.empty() || s.front() == '#') continue;
        if (!body_started && s.rfind("vars:", 0) == 0) {
            if (names.empty()) names = detail::split_names(s.substr(5));
            continue;
        }
        if (!body_started && s.rfind("options:", 0) == 0) {
            doc.options = detail::split_names(s.substr(8));
            continue;
        }
        if (!body_started && s.rfind("divisor:", 0) == 0) {
            doc.kind = InputDocument::Kind::Divisor;
            divisor_line = {number, strip(s.substr(8))};
            body_started = true;
            continue;
        }
        if (!body_started && s.rfind("lines:", 0) == 0) {
            doc.kind = InputDocument::Kind::Arrangement;
            body_started = body_is_list = true;
            continue;
        }
        if (!body_started && s.rfind("ideal:", 0) == 0) {
            doc.kind = InputDocument::Kind::Ideal;
            body_started = body_is_list = true;
            continue;
        }
        if (body_is_list) {
            body_lines.emplace_back(number, s);
            continue;
        }
        throw ParseError("unrecognized input line '" + s + "'", number, 1);
    }
    if (!body_started) throw ParseError("input contains no divisor:, lines: or ideal: section", 1, 1);

    if (names.empty()) names = {"x", "y", "z"};
    doc.context = make_context(names);

    if (divisor_line) {
        if (divisor_line->second.empty())
            throw ParseError("empty divisor expression", divisor_line->first, 1);
        doc.body.push_back(parse_polynomial(divisor_line->second, doc.context, divisor_line->first));
    } else {
        if (body_lines.empty()) throw ParseError("empty lines:/ideal: section", lines.size(), 1);
        for (const auto& [number, expr] : body_lines)
            doc.body.push_back(parse_polynomial(expr, doc.context, number));
    }
    return doc;
}

}  // namespace divfree
