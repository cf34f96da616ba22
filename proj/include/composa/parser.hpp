#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "composa/matrix.hpp"
#include "composa/phase_poly.hpp"

namespace composa {

using ParsedValue = std::variant<PhasePoly, SquareMatrix>;

/// Recursive-descent parser for the CLI expression grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | 'J' | 'hbar' | var | '(' expr ')' | matrix
///   var    := ('q'|'p') digits?
///   matrix := '[' row (',' row)* ']',  row := '[' expr (',' expr)* ']'
/// Epsilon comes from the composition class, never from the literal.
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, int eps) : text_(text), eps_(eps) {}

    ParsedValue parse() {
        ParsedValue v = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    ParsedValue parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        ParsedValue v = parse_term();
        if (neg) v = negate(std::move(v));
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            ParsedValue rhs = parse_term();
            v = c == '+' ? add(std::move(v), std::move(rhs)) : add(std::move(v), negate(std::move(rhs)));
        }
        return v;
    }

    ParsedValue parse_term() {
        ParsedValue v = parse_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            v = mul(std::move(v), parse_factor());
        }
        return v;
    }

    ParsedValue parse_factor() {
        ParsedValue v = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            unsigned e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned>(peek() - '0');
                if (e > 64) throw ParseError(at, "exponent too large");
                ++pos_;
            }
            v = power(std::move(v), e);
        }
        return v;
    }

    ParsedValue parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ParsedValue v = parse_expr();
            skip_ws();
            expect(')');
            return v;
        }
        if (c == '[') return parse_matrix();
        if (std::isdigit(static_cast<unsigned char>(c))) return ParsedValue(constant(parse_rational()));
        if (c == 'J' && !is_ident(peek_at(1))) {
            ++pos_;
            return ParsedValue(PhasePoly::constant(PairScalar::unit_j(eps_)));
        }
        if (text_.substr(pos_).starts_with("hbar") && !is_ident(peek_at(4))) {
            pos_ += 4;
            return ParsedValue(PhasePoly::var_hbar(1, eps_));
        }
        if (c == 'q' || c == 'p') {
            ++pos_;
            unsigned idx = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                idx = 0;
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    idx = idx * 10 + static_cast<unsigned>(text_[pos_++] - '0');
                if (idx == 0) fail("variable index must be >= 1");
            }
            return ParsedValue(c == 'q' ? PhasePoly::var_q(idx - 1, idx, eps_)
                                        : PhasePoly::var_p(idx - 1, idx, eps_));
        }
        fail(pos_ == text_.size() ? "unexpected end of input" : "unknown token");
    }

    Rational parse_rational() {
        Integer num = parse_nat();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(at, "expected denominator");
            Integer den = parse_nat();
            if (den == 0) throw ParseError(at, "zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_nat() {
        Integer v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    ParsedValue parse_matrix() {
        expect('[');
        std::vector<std::vector<PairScalar>> rows;
        while (true) {
            rows.push_back(parse_row());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            break;
        }
        unsigned dim = static_cast<unsigned>(rows.size());
        for (const auto& r : rows)
            if (r.size() != dim) fail("matrix must be square");
        SquareMatrix m(dim, eps_);
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
        return ParsedValue(std::move(m));
    }

    std::vector<PairScalar> parse_row() {
        skip_ws();
        expect('[');
        std::vector<PairScalar> row;
        while (true) {
            std::size_t at = pos_;
            ParsedValue v = parse_expr();
            auto* p = std::get_if<PhasePoly>(&v);
            if (!p || !p->is_constant()) throw ParseError(at, "matrix entries must be scalar constants");
            row.push_back(p->constant_value());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            break;
        }
        return row;
    }

    // -- value combination ---------------------------------------------------

    PhasePoly constant(const Rational& r) const {
        return PhasePoly::constant(PairScalar::from_rational(r, eps_));
    }

    ParsedValue negate(ParsedValue v) {
        return std::visit([](auto& x) { return ParsedValue(-x); }, v);
    }

    ParsedValue add(ParsedValue a, ParsedValue b) {
        if (a.index() != b.index()) fail("cannot add a matrix and a phase expression");
        if (auto* p = std::get_if<PhasePoly>(&a)) return ParsedValue(*p + std::get<PhasePoly>(b));
        return ParsedValue(std::get<SquareMatrix>(a) + std::get<SquareMatrix>(b));
    }

    ParsedValue mul(ParsedValue a, ParsedValue b) {
        if (auto* pa = std::get_if<PhasePoly>(&a)) {
            if (auto* pb = std::get_if<PhasePoly>(&b)) return ParsedValue(*pa * *pb);
            if (!pa->is_constant()) fail("only scalar constants can multiply a matrix");
            return ParsedValue(std::get<SquareMatrix>(b) * pa->constant_value());
        }
        if (auto* pb = std::get_if<PhasePoly>(&b)) {
            if (!pb->is_constant()) fail("only scalar constants can multiply a matrix");
            return ParsedValue(std::get<SquareMatrix>(a) * pb->constant_value());
        }
        return ParsedValue(std::get<SquareMatrix>(a) * std::get<SquareMatrix>(b));
    }

    ParsedValue power(ParsedValue v, unsigned e) {
        if (auto* p = std::get_if<PhasePoly>(&v)) return ParsedValue(p->pow(e));
        const auto& m = std::get<SquareMatrix>(v);
        SquareMatrix r = SquareMatrix::identity(m.dim(), m.epsilon());
        for (unsigned i = 0; i < e; ++i) r = r * m;
        return ParsedValue(std::move(r));
    }

    // -- lexing helpers ------------------------------------------------------

    static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char peek_at(std::size_t off) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    std::string_view text_;
    int eps_;
    std::size_t pos_ = 0;
};

inline ParsedValue parse_expression(std::string_view text, int eps) {
    return ExpressionParser(text, eps).parse();
}

inline std::string print_value(const ParsedValue& v) {
    return std::visit([](const auto& x) { return x.str(); }, v);
}

}  // namespace composa
