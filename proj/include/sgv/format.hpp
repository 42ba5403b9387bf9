#pragma once

#include <sstream>
#include <string>

#include "sgv/poly.hpp"

namespace sgv {

inline std::string to_string(const Chart& chart, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < chart.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += chart.var(i).name;
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

// Canonical text form; re-parsing a denominator-free polynomial's text yields
// an identical term map.
inline std::string to_string(const SuperPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono = to_string(*p.chart(), m);
        if (mono.empty()) {
            out << to_string(a);
        } else {
            if (a != 1) out << to_string(a) << "*";
            out << mono;
        }
        first = false;
    }
    std::string s = out.str();
    if (p.has_denominator()) {
        const auto& dens = p.chart()->denominators();
        std::string d;
        for (std::size_t i = 0; i < p.denominator_exponents().size(); ++i) {
            std::uint32_t e = p.denominator_exponents()[i];
            if (e == 0) continue;
            if (!d.empty()) d += "*";
            SuperPoly di = SuperPoly::from_terms(p.chart(), dens[i]);
            d += "(" + to_string(di) + ")";
            if (e > 1) d += "^" + std::to_string(e);
        }
        s = "(" + s + ") / " + d;
    }
    return s;
}

}  // namespace sgv
