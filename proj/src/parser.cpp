#include "symcurve/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <vector>

namespace symcurve {

namespace {

struct Token {
    enum class Kind { Number, Ident, Symbol, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n') advance();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance();
            continue;
        }
        const int tl = line;
        const int tc = col;
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            std::string num;
            bool dot = false;
            while (i < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[i])) || (src[i] == '.' && !dot))) {
                dot = dot || src[i] == '.';
                num += src[i];
                advance();
            }
            if (num == ".") throw ParseError("stray '.'", tl, tc);
            out.push_back({Token::Kind::Number, num, tl, tc});
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string id;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                id += src[i];
                advance();
            }
            out.push_back({Token::Kind::Ident, id, tl, tc});
        } else if (std::string_view("+-*/^()=").find(ch) != std::string_view::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, ch), tl, tc});
            advance();
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", tl, tc);
        }
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, ParseOptions opts) : toks_(tokenize(src)), opts_(opts) {}

    Parametrization file() {
        std::optional<RealPoly> x, y;
        while (peek().kind != Token::Kind::End) {
            const Token name = next();
            if (name.kind != Token::Kind::Ident || (name.text != "x" && name.text != "y"))
                throw ParseError("expected 'x(t) =' or 'y(t) ='", name.line, name.column);
            expect("(");
            const Token var = next();
            if (var.kind != Token::Kind::Ident || var.text != "t")
                throw ParseError("the parameter must be named t", var.line, var.column);
            expect(")");
            expect("=");
            auto& slot = name.text == "x" ? x : y;
            if (slot) throw ParseError(name.text + "(t) defined twice", name.line, name.column);
            slot = expr();
        }
        const Token& end = peek();
        if (!x) throw ParseError("missing definition of x(t)", end.line, end.column);
        if (!y) throw ParseError("missing definition of y(t)", end.line, end.column);
        return {std::move(*x), std::move(*y)};
    }

    RealPoly single_expression() {
        RealPoly p = expr();
        if (peek().kind != Token::Kind::End)
            throw ParseError("unexpected '" + peek().text + "'", peek().line, peek().column);
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    bool at_symbol(const char* s) const {
        return peek().kind == Token::Kind::Symbol && peek().text == s;
    }
    void expect(const char* s) {
        if (!at_symbol(s))
            throw ParseError(std::string("expected '") + s + "'", peek().line, peek().column);
        ++pos_;
    }

    void check_degree(long long degree, const Token& at) const {
        if (degree > opts_.degree_cap)
            throw DegreeCapError("expansion degree " + std::to_string(degree) + " exceeds cap " +
                                     std::to_string(opts_.degree_cap),
                                 at.line, at.column);
    }

    RealPoly expr() {
        RealPoly acc = term();
        while (at_symbol("+") || at_symbol("-")) {
            const bool minus = next().text == "-";
            RealPoly rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    RealPoly term() {
        bool literal = false;
        RealPoly acc = factor(&literal);
        while (true) {
            const Token& tok = peek();
            if (at_symbol("*")) {
                next();
                acc = multiply(acc, factor(&literal), tok);
            } else if (at_symbol("/")) {
                next();
                const Token& at = peek();
                RealPoly d = factor(&literal);
                if (!d.is_constant())
                    throw ParseError("division by a non-constant expression", at.line, at.column);
                if (d.is_zero()) throw ParseError("division by zero", at.line, at.column);
                acc = acc.scale(d.leading().inverse());
            } else if (literal && ((tok.kind == Token::Kind::Ident && tok.text == "t") || at_symbol("("))) {
                acc = multiply(acc, factor(&literal), tok);
            } else {
                return acc;
            }
        }
    }

    RealPoly multiply(const RealPoly& a, const RealPoly& b, const Token& at) const {
        check_degree(static_cast<long long>(a.degree()) + b.degree(), at);
        return a * b;
    }

    // *literal reports whether the factor was a bare numeric literal.
    RealPoly factor(bool* literal) {
        if (at_symbol("-") || at_symbol("+")) {
            const bool minus = next().text == "-";
            RealPoly f = factor(literal);
            return minus ? -f : f;
        }
        RealPoly base = atom(literal);
        if (at_symbol("^")) {
            const Token caret = next();
            const Token e = next();
            if (e.kind != Token::Kind::Number || e.text.find('.') != std::string::npos)
                throw ParseError("exponent must be a non-negative integer", e.line, e.column);
            if (e.text.size() > 9) check_degree(opts_.degree_cap + 1LL, caret);
            const long long ex = std::stoll(e.text);
            check_degree(static_cast<long long>(std::max(base.degree(), 0)) * ex, caret);
            *literal = false;
            return power(std::move(base), static_cast<unsigned long long>(ex));
        }
        return base;
    }

    static RealPoly power(RealPoly base, unsigned long long e) {
        RealPoly result = RealPoly::constant(FieldElement(1L));
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    RealPoly atom(bool* literal) {
        const Token tok = next();
        *literal = false;
        switch (tok.kind) {
            case Token::Kind::Number: {
                std::string text = tok.text;
                // int "/" uint binds as one rational literal
                if (tok.text.find('.') == std::string::npos && at_symbol("/") &&
                    toks_[pos_ + 1].kind == Token::Kind::Number &&
                    toks_[pos_ + 1].text.find('.') == std::string::npos) {
                    next();
                    const Token den = next();
                    if (Integer(den.text) == 0) throw ParseError("division by zero", den.line, den.column);
                    text += "/" + den.text;
                }
                *literal = true;
                return RealPoly::constant(FieldElement(Rational::parse(text)));
            }
            case Token::Kind::Ident: {
                if (tok.text == "t") return RealPoly::monomial(FieldElement(1L), 1);
                if (tok.text == "sqrt") return sqrt_call(tok);
                if (tok.text == "x" || tok.text == "y")
                    throw ParseError("expected an expression before '" + tok.text + "'", tok.line, tok.column);
                throw UnsupportedConstantError("unsupported symbol '" + tok.text + "'", tok.line, tok.column);
            }
            case Token::Kind::Symbol: {
                if (tok.text == "(") {
                    RealPoly inner = expr();
                    expect(")");
                    return inner;
                }
                throw ParseError("unexpected '" + tok.text + "'", tok.line, tok.column);
            }
            case Token::Kind::End: break;
        }
        throw ParseError("unexpected end of input", tok.line, tok.column);
    }

    RealPoly sqrt_call(const Token& at) {
        expect("(");
        const Token arg = next();
        if (arg.kind == Token::Kind::Symbol && arg.text == "-")
            throw UnsupportedConstantError("sqrt of a negative number is not real", arg.line, arg.column);
        if (arg.kind != Token::Kind::Number || arg.text.find('.') != std::string::npos ||
            !at_symbol(")"))
            throw UnsupportedConstantError("sqrt takes a non-negative integer literal", arg.line,
                                           arg.column);
        expect(")");
        const Integer n(arg.text);
        if (!n.fits_ulong_p())
            throw UnsupportedConstantError("radicand too large", arg.line, arg.column);
        try {
            return RealPoly::constant(FieldElement::sqrt(n.get_ui()));
        } catch (const UnsupportedRadicand& e) {
            throw UnsupportedConstantError(e.what(), at.line, at.column);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ParseOptions opts_;
};

}  // namespace

ParseOptions default_parse_options() {
    ParseOptions opts;
    if (const char* env = std::getenv("SYMCURVE_DEGREE_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) opts.degree_cap = static_cast<int>(v);
    }
    return opts;
}

Parametrization parse_curve(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).file();
}

RealPoly parse_expression(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).single_expression();
}

FieldElement parse_field_element(std::string_view text) {
    RealPoly p = parse_expression(text);
    if (!p.is_constant()) throw ParseError("expected a constant, got a polynomial in t", 1, 1);
    return p.coeff(0);
}

std::string format_curve(const Parametrization& p) {
    return "x(t) = " + to_string(p.x) + "\ny(t) = " + to_string(p.y) + "\n";
}

}  // namespace symcurve
