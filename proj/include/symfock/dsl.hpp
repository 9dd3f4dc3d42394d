#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "symfock/fock.hpp"
#include "symfock/symfunc.hpp"

// Text forms.
//
// States:     sum of [coef '*'] basis '[' parts ']' terms, coef a rational
//             literal a or a/b, e.g.  "s[2,1] - 1/2*p[2]".  Single-basis
//             input keeps its basis; mixed input is normalized to Schur.
// Operators:  expr   := ['-'] term (('+'|'-') term)*
//             term   := factor ('*' factor)*
//             factor := RATIONAL | gen | '(' expr ')'
//             gen    := 'e_'INT | 'f_'INT | 'h_'INT | 'd' | 'id'
//                     | 'mul('state')' | 'adj('state')'
//                     | 'tmul('state')' | 'tadj('state')'
//             '*' is composition and acts right-to-left: in a*b, b hits the
//             state first.

namespace symfock {

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos + 1) + ")"),
          position(pos) {}
};

namespace dsl_detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(pos, std::string("expected '") + c + "' " + what);
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }

    long integer(bool allow_sign) {
        skip_ws();
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError(start, "expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    Rational rational() {
        long num = integer(false);
        if (eat('/')) {
            long den = integer(false);
            if (den == 0) throw ParseError(pos, "zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }
};

struct StateTerm {
    Rational coeff;
    BasisTag basis;
    Partition lambda;
};

inline StateTerm parse_state_term(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = cur.rational();
        cur.expect('*', "between coefficient and basis symbol");
    }
    char sym = cur.peek();
    if (sym != 's' && sym != 'e' && sym != 'h' && sym != 'p')
        throw ParseError(cur.pos, "expected a basis symbol s, e, h or p");
    ++cur.pos;
    BasisTag basis = basis_from_symbol(sym);
    cur.expect('[', "to open the partition");
    std::vector<int> parts;
    if (!cur.eat(']')) {
        while (true) {
            std::size_t ppos = cur.pos;
            long v = cur.integer(false);
            if (v < 1) throw ParseError(ppos, "partition parts must be positive");
            if (!parts.empty() && parts.back() < v)
                throw ParseError(ppos, "parts must be weakly decreasing");
            parts.push_back(static_cast<int>(v));
            if (cur.eat(']')) break;
            cur.expect(',', "between partition parts");
        }
    }
    (void)start;
    return {std::move(coeff), basis, Partition(std::move(parts))};
}

inline SymElt parse_state_text(Cursor& cur) {
    cur.skip_ws();
    // bare "0" is the zero element
    if (cur.peek() == '0') {
        std::size_t save = cur.pos;
        ++cur.pos;
        cur.skip_ws();
        if (cur.pos >= cur.text.size() || cur.text[cur.pos] == ')') return SymElt::zero();
        cur.pos = save;
    }
    std::vector<StateTerm> terms;
    bool negate = cur.eat('-');
    terms.push_back(parse_state_term(cur));
    if (negate) terms.back().coeff = -terms.back().coeff;
    while (true) {
        cur.skip_ws();
        if (cur.eat('+')) {
            terms.push_back(parse_state_term(cur));
        } else if (cur.eat('-')) {
            terms.push_back(parse_state_term(cur));
            terms.back().coeff = -terms.back().coeff;
        } else {
            break;
        }
    }
    bool uniform = true;
    for (auto& t : terms)
        if (t.basis != terms.front().basis) uniform = false;
    if (uniform) {
        SymElt out(terms.front().basis);
        for (auto& t : terms) out.add_term(std::move(t.lambda), std::move(t.coeff));
        return out;
    }
    SymElt out(BasisTag::schur);
    for (auto& t : terms)
        out += t.coeff * to_schur(SymElt::single(t.basis, std::move(t.lambda)));
    return out;
}

// -- operator grammar --------------------------------------------------------

inline OperatorExpr parse_op_expr(Cursor& cur);

inline SymElt parse_bracketed_state(Cursor& cur) {
    cur.expect('(', "to open the state argument");
    SymElt s = parse_state_text(cur);
    cur.expect(')', "to close the state argument");
    return s;
}

inline OperatorExpr parse_op_factor(Cursor& cur, Rational& scalar, bool& have_op) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        scalar *= cur.rational();
        have_op = false;
        return OperatorExpr::identity();
    }
    have_op = true;
    if (cur.eat('(')) {
        OperatorExpr inner = parse_op_expr(cur);
        cur.expect(')', "to close the group");
        return inner;
    }
    if (cur.eat_word("e_")) return OperatorExpr::e(cur.integer(true));
    if (cur.eat_word("f_")) return OperatorExpr::f(cur.integer(true));
    if (cur.eat_word("h_")) return OperatorExpr::h(cur.integer(true));
    if (cur.eat_word("tmul")) return OperatorExpr::tmul_by(parse_bracketed_state(cur));
    if (cur.eat_word("tadj")) return OperatorExpr::tadj_by(parse_bracketed_state(cur));
    if (cur.eat_word("mul")) return OperatorExpr::mul_by(parse_bracketed_state(cur));
    if (cur.eat_word("adj")) return OperatorExpr::adj_by(parse_bracketed_state(cur));
    if (cur.eat_word("id")) return OperatorExpr::identity();
    if (cur.eat_word("d")) return OperatorExpr::d();
    throw ParseError(start, "expected a generator, rational or parenthesized expression");
}

/// term := factor ('*' factor)*. Rational factors accumulate into one scale;
/// operator factors compose right to left.
inline OperatorExpr parse_op_term(Cursor& cur, bool negated) {
    Rational scalar = negated ? -1 : 1;
    std::vector<OperatorExpr> chain;
    bool have_op = false;
    OperatorExpr first = parse_op_factor(cur, scalar, have_op);
    if (have_op) chain.push_back(std::move(first));
    while (cur.eat('*')) {
        bool op2 = false;
        OperatorExpr next = parse_op_factor(cur, scalar, op2);
        if (op2) chain.push_back(std::move(next));
    }
    OperatorExpr body = OperatorExpr::identity();
    if (!chain.empty()) {
        body = std::move(chain.back());
        for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
            body = OperatorExpr::compose(std::move(*it), std::move(body));
    }
    if (scalar == 1) return body;
    return OperatorExpr::scale(scalar, std::move(body));
}

inline OperatorExpr parse_op_expr(Cursor& cur) {
    std::vector<OperatorExpr> terms;
    bool neg = cur.eat('-');
    terms.push_back(parse_op_term(cur, neg));
    while (true) {
        cur.skip_ws();
        if (cur.eat('+'))
            terms.push_back(parse_op_term(cur, false));
        else if (cur.eat('-'))
            terms.push_back(parse_op_term(cur, true));
        else
            break;
    }
    if (terms.size() == 1) return std::move(terms.front());
    return OperatorExpr::sum(std::move(terms));
}

} // namespace dsl_detail

/// Parses a state. Mixed-basis sums are normalized to the Schur basis;
/// single-basis input keeps its basis tag.
inline SymElt parse_state(const std::string& text) {
    dsl_detail::Cursor cur{text};
    SymElt s = dsl_detail::parse_state_text(cur);
    if (!cur.done()) throw ParseError(cur.pos, "trailing input after state");
    return s;
}

inline OperatorExpr parse_operator(const std::string& text) {
    dsl_detail::Cursor cur{text};
    OperatorExpr e = dsl_detail::parse_op_expr(cur);
    if (!cur.done()) throw ParseError(cur.pos, "trailing input after expression");
    return e;
}

inline std::string print_state(const SymElt& x) { return x.to_string(); }

namespace dsl_detail {

inline std::string print_op(const OperatorExpr& expr);

inline std::string parenthesize_if(const OperatorExpr& e, bool cond) {
    std::string s = print_op(e);
    return cond ? "(" + s + ")" : s;
}

inline bool is_sum(const OperatorExpr& e) {
    return std::holds_alternative<OperatorExpr::Sum>(e.node);
}
inline bool is_scale(const OperatorExpr& e) {
    return std::holds_alternative<OperatorExpr::Scale>(e.node);
}
inline bool is_compose(const OperatorExpr& e) {
    return std::holds_alternative<OperatorExpr::Compose>(e.node);
}

inline std::string print_op(const OperatorExpr& expr) {
    struct V {
        std::string operator()(const OperatorExpr::ChevE& n) const { return "e_" + std::to_string(n.i); }
        std::string operator()(const OperatorExpr::ChevF& n) const { return "f_" + std::to_string(n.i); }
        std::string operator()(const OperatorExpr::CartanH& n) const { return "h_" + std::to_string(n.i); }
        std::string operator()(const OperatorExpr::Degree&) const { return "d"; }
        std::string operator()(const OperatorExpr::Id&) const { return "id"; }
        std::string operator()(const OperatorExpr::MulBy& n) const { return "mul(" + n.b.to_string() + ")"; }
        std::string operator()(const OperatorExpr::AdjBy& n) const { return "adj(" + n.b.to_string() + ")"; }
        std::string operator()(const OperatorExpr::TwistMulBy& n) const { return "tmul(" + n.b.to_string() + ")"; }
        std::string operator()(const OperatorExpr::TwistAdjBy& n) const { return "tadj(" + n.b.to_string() + ")"; }
        std::string operator()(const OperatorExpr::Compose& n) const {
            return parenthesize_if(*n.after, is_sum(*n.after) || is_scale(*n.after) || is_compose(*n.after)) +
                   "*" + parenthesize_if(*n.first, is_sum(*n.first) || is_scale(*n.first));
        }
        std::string operator()(const OperatorExpr::Sum& n) const {
            std::string out;
            for (std::size_t k = 0; k < n.terms.size(); ++k) {
                const OperatorExpr& t = *n.terms[k];
                bool neg = false;
                std::string body;
                if (auto* sc = std::get_if<OperatorExpr::Scale>(&t.node); sc && sc->c < 0) {
                    neg = true;
                    body = sc->c == -1 ? parenthesize_if(*sc->child, is_sum(*sc->child) || is_scale(*sc->child))
                                       : print_op(OperatorExpr::scale(-sc->c, *sc->child));
                } else {
                    body = parenthesize_if(t, is_sum(t));
                }
                if (k == 0)
                    out += neg ? "-" + body : body;
                else
                    out += (neg ? " - " : " + ") + body;
            }
            return out;
        }
        std::string operator()(const OperatorExpr::Scale& n) const {
            if (n.c == -1)
                return "-" + parenthesize_if(*n.child, is_sum(*n.child) || is_scale(*n.child));
            return rational_string(n.c) + "*" +
                   parenthesize_if(*n.child, is_sum(*n.child) || is_scale(*n.child));
        }
    };
    return std::visit(V{}, expr.node);
}

} // namespace dsl_detail

/// Prints an operator expression so that parse_operator(print_operator(x))
/// rebuilds the same tree.
inline std::string print_operator(const OperatorExpr& expr) { return dsl_detail::print_op(expr); }

} // namespace symfock
