#pragma once

/**
 * @file scalar_parse.hpp
 * @brief Parsing of scalar literals in each field, and the field selector.
 *
 * Grammar (recursive descent): integers, + - * / ^ and parentheses, with
 * implicit multiplication ("2z^2"), plus one field variable: z for the
 * cyclotomic generator, q for the rational-function variable. Prime field
 * elements accept the "c mod p" serialized form; cyclotomics accept the
 * "zeta n: ..." header.
 */

#include <cctype>
#include <string>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "prime_field.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace qsl2 {

namespace detail {

template <class K>
K variable_value(const std::string& name, const K& sample);

template <>
inline Rational variable_value<Rational>(const std::string& name, const Rational&) {
    throw ParseError("unknown symbol '" + name + "' in a rational literal", 0);
}
template <>
inline PrimeField variable_value<PrimeField>(const std::string& name, const PrimeField&) {
    throw ParseError("unknown symbol '" + name + "' in a prime-field literal", 0);
}
template <>
inline Cyclotomic variable_value<Cyclotomic>(const std::string& name, const Cyclotomic& s) {
    if (name == "z") return Cyclotomic::zeta(s.conductor());
    throw ParseError("unknown symbol '" + name + "' (the cyclotomic generator is z)", 0);
}
template <>
inline RationalFunction variable_value<RationalFunction>(const std::string& name,
                                                         const RationalFunction&) {
    if (name == "q" || name == "qvar") return RationalFunction::variable();
    throw ParseError("unknown symbol '" + name + "' (the formal variable is q)", 0);
}

template <class K>
class ScalarParser {
  public:
    ScalarParser(const std::string& text, const K& sample) : s_(text), sample_(sample) {}

    K parse() {
        K v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return v;
    }

  private:
    const std::string& s_;
    K sample_;
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

    K expr() {
        K acc = term();
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    K term() {
        K acc = unary();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                const K d = unary();
                if (d.is_zero()) throw ParseError("division by zero", pos_);
                acc = acc / d;
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                acc = acc * unary();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    K unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    K power() {
        K base = primary();
        if (!eat('^')) return base;
        bool neg = eat('-');
        const long e = integer_literal();
        K acc = sample_.one();
        for (long i = 0; i < e; ++i) acc = acc * base;
        return neg ? acc.inverse() : acc;
    }

    K primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            K v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            try {
                return sample_.from_integer(Integer(digits));
            } catch (const std::exception&) {
                throw ParseError("bad integer literal", start);
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                name += s_[pos_++];
            return variable_value<K>(name, sample_);
        }
        throw ParseError("expected a number, variable or '('", pos_);
    }

    long integer_literal() {
        skip_ws();
        const std::size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected an integer", start);
        return std::stol(digits);
    }
};

}  // namespace detail

/// Parse a scalar literal in the field of `sample`.
template <class K>
K parse_scalar(const std::string& text, const K& sample) {
    std::string body = text;
    if constexpr (std::is_same_v<K, PrimeField>) {
        const auto at = body.find(" mod ");
        if (at != std::string::npos) {
            const long p = std::stol(body.substr(at + 5));
            if (sample.modulus() != 0 && p != sample.modulus())
                throw ParseError("literal declares modulus " + std::to_string(p) +
                                     " but the field is F_" + std::to_string(sample.modulus()),
                                 at);
            body = body.substr(0, at);
            return detail::ScalarParser<PrimeField>(body, PrimeField(0, p)).parse();
        }
    }
    if constexpr (std::is_same_v<K, Cyclotomic>) {
        if (body.rfind("zeta ", 0) == 0) {
            const auto colon = body.find(':');
            if (colon == std::string::npos)
                throw ParseError("expected ':' after the zeta header", 0);
            const unsigned long n = std::stoul(body.substr(5, colon - 5));
            if (sample.conductor() != 0 && n != sample.conductor())
                throw ParseError("literal declares conductor " + std::to_string(n) +
                                     " but the field is Q(zeta_" +
                                     std::to_string(sample.conductor()) + ")",
                                 0);
            const std::string poly = body.substr(colon + 1);
            return detail::ScalarParser<Cyclotomic>(poly, Cyclotomic::zeta(n).zero()).parse();
        }
    }
    return detail::ScalarParser<K>(body, sample).parse();
}

/// Field selector: rational | fp:<p> | cyclotomic:<n> | qvar.
struct FieldSpec {
    enum class Kind { Rational, Fp, Cyclotomic, QVar } kind = Kind::Rational;
    long p = 0;
    unsigned long n = 0;

    std::string str() const {
        switch (kind) {
            case Kind::Rational: return "rational";
            case Kind::Fp: return "fp:" + std::to_string(p);
            case Kind::Cyclotomic: return "cyclotomic:" + std::to_string(n);
            case Kind::QVar: return "qvar";
        }
        return "?";
    }
    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && p == o.p && n == o.n;
    }
};

inline FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    if (text == "rational") {
        spec.kind = FieldSpec::Kind::Rational;
    } else if (text == "qvar") {
        spec.kind = FieldSpec::Kind::QVar;
    } else if (text.rfind("fp:", 0) == 0) {
        spec.kind = FieldSpec::Kind::Fp;
        spec.p = std::stol(text.substr(3));
        if (spec.p < 2 || spec.p >= (1L << 31) || !is_prime(Integer(spec.p)))
            throw ParseError("fp:<p> needs a prime p below 2^31", 3);
    } else if (text.rfind("cyclotomic:", 0) == 0) {
        spec.kind = FieldSpec::Kind::Cyclotomic;
        spec.n = std::stoul(text.substr(11));
        if (spec.n == 0) throw ParseError("cyclotomic:<n> needs n >= 1", 11);
    } else {
        throw ParseError("unknown field selector '" + text + "'", 0);
    }
    return spec;
}

}  // namespace qsl2
