#pragma once

#include <algorithm>
#include <vector>

#include "sgv/poly.hpp"

namespace sgv {

// All monomials of total degree <= max_degree with odd exponents <= 1, in the
// canonical graded order (1, x, theta, x^2, x*theta, ...).  This is the basis
// on which equality of bounded-order differential operators is decided.
inline std::vector<SuperPoly> probe_basis(const ChartPtr& chart, unsigned max_degree) {
    std::vector<Monomial> monos;
    Monomial work(chart->size());
    auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i == chart->size()) {
            monos.push_back(work);
            return;
        }
        unsigned cap = chart->odd(i) ? 1u : remaining;
        for (unsigned e = 0; e <= cap && e <= remaining; ++e) {
            work[i] = e;
            self(self, i + 1, remaining - e);
        }
        work[i] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(monos.begin(), monos.end(), MonomialOrder{});
    std::vector<SuperPoly> out;
    out.reserve(monos.size());
    for (const Monomial& m : monos) {
        TermMap t;
        t.emplace(m, Rational(1));
        out.push_back(SuperPoly::from_terms(chart, std::move(t)));
    }
    return out;
}

}  // namespace sgv
