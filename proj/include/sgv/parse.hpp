#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "sgv/poly.hpp"

namespace sgv {

// Shared expression grammar (manifests, CLI):
//
//   expr     := ['+'|'-'] term { ('+'|'-') term }
//   term     := factor { '*' factor }
//   factor   := atom [ '^' natural ]
//   atom     := rational | identifier | '(' expr ')'
//   rational := natural [ '/' natural ]
//
// Identifiers are chart variables.  Odd squares normalize to zero as the
// polynomial is assembled.
class ExpressionParser {
public:
    ExpressionParser(std::string_view src, ChartPtr chart)
        : src_(src), chart_(std::move(chart)) {}

    SuperPoly parse() {
        SuperPoly p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return p;
    }

private:
    SuperPoly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        SuperPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            SuperPoly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    SuperPoly term() {
        SuperPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = acc * factor();
        }
        return acc;
    }

    SuperPoly factor() {
        SuperPoly base = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected");
            base = base.pow(static_cast<std::uint32_t>(natural()));
        }
        return base;
    }

    SuperPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            SuperPoly p = expr();
            skip_ws();
            if (take() != ')') fail("')' expected");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = natural();
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("denominator expected");
                Integer den = natural();
                if (den == 0) fail("zero denominator in rational literal");
                return SuperPoly::constant(chart_, Rational(num, den));
            }
            return SuperPoly::constant(chart_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = identifier();
            auto idx = chart_->find(id);
            if (!idx) fail("unknown variable '" + id + "'");
            return SuperPoly::variable(chart_, *idx);
        }
        fail("unexpected character");
    }

    Integer natural() {
        Integer v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::string identifier() {
        std::string id;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
                id += c;
                ++pos_;
            } else {
                break;
            }
        }
        return id;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char take() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& why) {
        throw Error("parse error at offset " + std::to_string(pos_) + " in \"" +
                    std::string(src_) + "\": " + why);
    }

    std::string_view src_;
    ChartPtr chart_;
    std::size_t pos_ = 0;
};

inline SuperPoly parse_expression(std::string_view src, const ChartPtr& chart) {
    return ExpressionParser(src, chart).parse();
}

}  // namespace sgv
