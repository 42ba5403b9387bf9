#pragma once

#include "sgv/poly.hpp"

namespace sgv {

namespace detail {

inline void require_nilpotent(const SuperPoly& u, const char* op) {
    if (!u.is_nilpotent())
        throw Error(std::string(op) +
                    ": nonzero body (argument must be nilpotent to stay in the "
                    "rational coefficient field)");
}

// Applies a terminating power series sum_k c_k u^k to a nilpotent u.  The
// caller supplies c_k via next_coef(k, previous coefficient).
template <typename NextCoef>
SuperPoly nilpotent_series(const SuperPoly& u, Rational c0, NextCoef next_coef) {
    SuperPoly acc = SuperPoly::constant(u.chart(), c0);
    SuperPoly upow = SuperPoly::constant(u.chart(), 1);
    Rational ck = c0;
    for (std::uint32_t k = 1;; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        ck = next_coef(k, ck);
        acc += ck * upow;
        if (k > u.chart()->odd_count() + 1)
            throw Error("series did not terminate");  // unreachable for nilpotent input
    }
    return acc;
}

}  // namespace detail

inline SuperPoly exp_nilpotent(const SuperPoly& u) {
    detail::require_nilpotent(u, "exp_nilpotent");
    return detail::nilpotent_series(u, 1, [](std::uint32_t k, const Rational& prev) {
        return prev / k;
    });
}

// log(1 + u)
inline SuperPoly log_one_plus(const SuperPoly& u) {
    detail::require_nilpotent(u, "log_one_plus");
    SuperPoly acc = SuperPoly::zero(u.chart());
    SuperPoly upow = SuperPoly::constant(u.chart(), 1);
    for (std::uint32_t k = 1;; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        Rational c = Rational(1, k);
        if ((k & 1) == 0) c = -c;
        acc += c * upow;
    }
    return acc;
}

// (1 + u)^{1/2}
inline SuperPoly sqrt_one_plus(const SuperPoly& u) {
    detail::require_nilpotent(u, "sqrt_one_plus");
    return detail::nilpotent_series(u, 1, [](std::uint32_t k, const Rational& prev) {
        // binomial(1/2, k) = binomial(1/2, k-1) * (1/2 - (k-1)) / k
        return prev * (Rational(1, 2) - Rational(k - 1)) / k;
    });
}

// (1 + u)^{-1}
inline SuperPoly inverse_one_plus(const SuperPoly& u) {
    detail::require_nilpotent(u, "inverse_one_plus");
    return detail::nilpotent_series(u, 1, [](std::uint32_t, const Rational& prev) {
        return -prev;
    });
}

namespace detail {

// c * prod_i d_i^{net_i} with signed exponents (negative ones sit in the
// denominator slot of the result).
inline SuperPoly make_unit(const ChartPtr& chart, const Rational& c,
                           const std::vector<std::int64_t>& net) {
    std::vector<std::uint32_t> den(net.size(), 0);
    SuperPoly r = SuperPoly::constant(chart, c);
    for (std::size_t i = 0; i < net.size(); ++i) {
        if (net[i] < 0) den[i] = static_cast<std::uint32_t>(-net[i]);
        for (std::int64_t j = 0; j < net[i]; ++j)
            r = r * SuperPoly::from_terms(chart, chart->denominators()[i]);
    }
    return r * SuperPoly::from_terms(chart, SuperPoly::constant(chart, 1).terms(), den);
}

// Factors f = c * prod d_i^{net_i} * (1 + n) with c a nonzero rational, the
// d_i declared denominators and n nilpotent.  This is the invertibility
// normal form: it exists iff the body of f is a unit of the localized ring.
struct UnitFactorization {
    Rational c;
    std::vector<std::int64_t> net;  // signed exponents over chart denominators
    SuperPoly nilpotent_rest;       // n
};

inline UnitFactorization unit_factorization(const SuperPoly& f, const char* op) {
    const ChartPtr& chart = f.chart();
    SuperPoly body = f.body();
    if (body.is_zero()) throw Error(std::string(op) + ": zero body is not invertible");
    TermMap e = body.terms();
    std::vector<std::int64_t> net(chart->denominators().size(), 0);
    for (std::size_t i = 0; i < chart->denominators().size(); ++i) {
        for (;;) {
            auto q = try_divide(*chart, e, chart->denominators()[i]);
            if (!q) break;
            e = std::move(*q);
            ++net[i];
        }
        if (i < f.denominator_exponents().size()) net[i] -= f.denominator_exponents()[i];
    }
    if (e.size() != 1 || !e.begin()->first.is_constant())
        throw Error(std::string(op) +
                    ": body is not invertible over the declared denominator set");
    Rational c = e.begin()->second;
    std::vector<std::int64_t> minus_net(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) minus_net[i] = -net[i];
    SuperPoly n = f * make_unit(chart, Rational(1) / c, minus_net) -
                  SuperPoly::constant(chart, 1);
    if (!n.is_nilpotent()) throw Error(std::string(op) + ": internal factorization error");
    return {std::move(c), std::move(net), std::move(n)};
}

}  // namespace detail

// Multiplicative inverse within the localized ring.
inline SuperPoly invert(const SuperPoly& f) {
    auto uf = detail::unit_factorization(f, "invert");
    std::vector<std::int64_t> minus_net(uf.net.size());
    for (std::size_t i = 0; i < uf.net.size(); ++i) minus_net[i] = -uf.net[i];
    return detail::make_unit(f.chart(), Rational(1) / uf.c, minus_net) *
           inverse_one_plus(uf.nilpotent_rest);
}

// f^{1/2}; requires the unit part to be a perfect square (rational square
// times even powers of the declared denominators).
inline SuperPoly half_power(const SuperPoly& f) {
    auto uf = detail::unit_factorization(f, "half_power");
    auto root = rational_sqrt(uf.c);
    if (!root) throw Error("half_power: body constant is not a rational square");
    std::vector<std::int64_t> half_net(uf.net.size());
    for (std::size_t i = 0; i < uf.net.size(); ++i) {
        if (uf.net[i] % 2 != 0) throw Error("half_power: odd denominator exponent in body");
        half_net[i] = uf.net[i] / 2;
    }
    return detail::make_unit(f.chart(), *root, half_net) * sqrt_one_plus(uf.nilpotent_rest);
}

// log f for f = 1 + nilpotent.
inline SuperPoly log_unit(const SuperPoly& f) {
    SuperPoly u = f - SuperPoly::constant(f.chart(), 1);
    if (!u.is_nilpotent())
        throw Error("log_unit: argument must be 1 + nilpotent");
    return log_one_plus(u);
}

}  // namespace sgv
