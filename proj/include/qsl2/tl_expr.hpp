#pragma once

/**
 * @file tl_expr.hpp
 * @brief Text syntax for Temperley-Lieb elements.
 *
 * Grammar:
 *   expr   := comp ( '+' comp )*            sum of elements
 *   comp   := tensor ( '*' tensor )*        composition, right factor first:
 *                                           a * b means "apply b, then a"
 *   tensor := factor ( '(+)' factor )*      horizontal juxtaposition
 *   factor := '[' scalar ']' factor         scalar multiple
 *           | atom
 *   atom   := id(n) | e(i,n) | cup | cap | jw(n) | '(' expr ')'
 *
 * The printer emits a sum of '[coefficient] diagram' terms, each diagram as
 * a composition of elementary cup/cap layers; parse(print(x)) == x.
 */

#include <string>

#include "errors.hpp"
#include "scalar_parse.hpp"
#include "temperley_lieb.hpp"

namespace qsl2 {

namespace detail {

template <class K>
class TLParser {
  public:
    TLParser(const std::string& text, const K& q)
        : s_(text), q_(q), one_(q.one()), delta_(tl_loop_value(q)) {}

    TLElement<K> parse() {
        TLElement<K> v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return v;
    }

  private:
    const std::string& s_;
    K q_, one_, delta_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }

    TLElement<K> expr() {
        TLElement<K> acc = composition();
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '+') {
                ++pos_;
                acc = acc + composition();
            } else {
                return acc;
            }
        }
    }

    TLElement<K> composition() {
        TLElement<K> acc = tensor();
        while (true) {
            skip_ws();
            // '*' is composition; "(+)" starts with '(', so no ambiguity
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                const TLElement<K> rhs = tensor();
                acc = tl_compose(rhs, acc, delta_);  // acc o rhs: rhs applied first
            } else {
                return acc;
            }
        }
    }

    TLElement<K> tensor() {
        TLElement<K> acc = factor();
        while (eat_word("(+)")) acc = tl_tensor(acc, factor());
        return acc;
    }

    TLElement<K> factor() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '[') {
            const std::size_t open = pos_++;
            const std::size_t close = s_.find(']', pos_);
            if (close == std::string::npos)
                throw ParseError("unterminated scalar bracket", open);
            const std::string lit = s_.substr(pos_, close - pos_);
            pos_ = close + 1;
            K c;
            try {
                c = parse_scalar(lit, q_);
            } catch (const ParseError& e) {
                throw ParseError("bad scalar literal '" + lit + "'", open + 1 + e.position);
            }
            return factor() * c;
        }
        return atom();
    }

    TLElement<K> atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (eat('(')) {
            // reject "(+)" leaking in as a parenthesized '+'
            TLElement<K> v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (eat_word("id")) {
            const unsigned n = unsigned_arg1();
            return TLElement<K>::identity(n, one_);
        }
        if (eat_word("cup")) return TLElement<K>::single(TLDiagram::cup(), one_);
        if (eat_word("cap")) return TLElement<K>::single(TLDiagram::cap(), one_);
        if (eat_word("jw")) {
            const unsigned n = unsigned_arg1();
            return jones_wenzl(n, q_);
        }
        if (eat_word("e")) {
            if (!eat('(')) throw ParseError("expected '(' after e", pos_);
            const unsigned i = integer_literal();
            if (!eat(',')) throw ParseError("expected ',' in e(i,n)", pos_);
            const unsigned n = integer_literal();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            if (i < 1 || i >= n) throw ParseError("e(i,n) needs 1 <= i < n", at);
            return TLElement<K>::single(TLDiagram::e(i, n), one_);
        }
        throw ParseError("expected id(n), e(i,n), cup, cap, jw(n), a scalar or '('", at);
    }

    unsigned unsigned_arg1() {
        if (!eat('(')) throw ParseError("expected '('", pos_);
        const unsigned n = integer_literal();
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        return n;
    }

    unsigned integer_literal() {
        skip_ws();
        const std::size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected an integer", start);
        return static_cast<unsigned>(std::stoul(digits));
    }
};

}  // namespace detail

template <class K>
TLElement<K> parse_tl_expression(const std::string& text, const K& q) {
    return detail::TLParser<K>(text, q).parse();
}

/// One elementary layer as an expression.
inline std::string tl_layer_expr(const std::string& kind, unsigned width_before, unsigned pos) {
    const unsigned used = kind == "cap" ? 2 : 0;
    const unsigned right = width_before - pos - used;
    std::string out;
    if (pos > 0) out += "id(" + std::to_string(pos) + ") (+) ";
    out += kind;
    if (right > 0) out += " (+) id(" + std::to_string(right) + ")";
    return out;
}

/// A single diagram as a composition of elementary layers (first applied
/// printed last, matching the '*' convention).
inline std::string tl_diagram_expr(const TLDiagram& d) {
    const DiagramFactorization fact = tl_factorize(d);
    std::vector<std::string> layers;  // in application order
    for (const auto& [width, pos] : fact.caps)
        layers.push_back(tl_layer_expr("cap", width, pos));
    for (const auto& [width, pos] : fact.cups)
        layers.push_back(tl_layer_expr("cup", width, pos));
    if (layers.empty()) return "id(" + std::to_string(d.sources()) + ")";
    std::string out;
    for (std::size_t k = layers.size(); k-- > 0;) {
        if (!out.empty()) out += " * ";
        out += "(" + layers[k] + ")";
    }
    return out;
}

/// Round-trippable rendering: sum of [coefficient] diagram terms.
template <class K>
std::string tl_element_str(const TLElement<K>& elt) {
    if (elt.is_zero())
        return "[0] " + tl_diagram_expr(tl_basis(elt.sources(), elt.targets()).front());
    std::string out;
    for (const auto& [d, c] : elt.terms()) {
        if (!out.empty()) out += " + ";
        out += "[" + c.str() + "] " + tl_diagram_expr(d);
    }
    return out;
}

}  // namespace qsl2
