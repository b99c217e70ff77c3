#include "nevan/parser.hpp"

#include <cctype>

namespace nevan {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const Field& field, const std::vector<std::string>& names)
        : text_(text), field_(field), names_(names) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial constant(const Scalar& c) const { return Polynomial::constant(field_, names_.size(), c); }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    skip_ws();
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant");
                }
                acc = acc.scaled(d.constant_term().inv());
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            if (pos_ - start > 6) fail("exponent too large");
            return base.pow(std::stoull(std::string(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Integer n(std::string(text_.substr(start, pos_ - start)));
            return constant(field_.from_integer(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string ident(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == ident) return Polynomial::variable(field_, names_.size(), i);
            if (ident == "z" && names_.size() == 1 && names_[0] == "z1")
                return Polynomial::variable(field_, 1, 0);
            if (ident == "t") {
                if (field_.kind() != FieldKind::tadic) {
                    pos_ = start;
                    fail("'t' is only available over a tadic field");
                }
                return constant(field_.t());
            }
            pos_ = start;
            fail("unknown variable '" + ident + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Field& field_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, const std::vector<std::string>& names) {
    return PolyParser(text, field, names).parse();
}

Polynomial parse_domain(std::string_view text, const Field& field, std::size_t m) {
    return parse_polynomial(text, field, domain_names(m));
}

Polynomial parse_ambient(std::string_view text, const Field& field, std::size_t ambient_dim) {
    return parse_polynomial(text, field, ambient_names(ambient_dim + 1));
}

Scalar parse_scalar(std::string_view text, const Field& field) {
    static const std::vector<std::string> none;
    return parse_polynomial(text, field, none).constant_term();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&](std::size_t col) { throw ParseError("malformed rational '" + s + "'", col); };
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (!digits) bad(i + 1);
    if (i < s.size()) {
        if (s[i] != '/') bad(i + 1);
        ++i;
        std::size_t dd = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++dd;
        if (!dd || i != s.size()) bad(i + 1);
    }
    std::string clean = s[0] == '+' ? s.substr(1) : s;
    Rational q(clean);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", s.find('/') + 2);
    q.canonicalize();
    return q;
}

}  // namespace nevan
