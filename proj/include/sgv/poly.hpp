#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sgv/chart.hpp"

namespace sgv {

namespace detail {

// Sign of merging normal-ordered monomial b into normal-ordered monomial a
// (odd factors of b anticommute leftwards past the odd factors of a that sit
// at larger chart indices).  Returns 0 when the product vanishes because a
// and b share an odd variable.
inline int merge_sign(const Chart& c, const Monomial& a, const Monomial& b) {
    int swaps = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c.odd(i) || b[i] == 0) continue;
        if (a[i] != 0) return 0;
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c.odd(j) && a[j] != 0) ++swaps;
    }
    return (swaps & 1) ? -1 : 1;
}

inline Monomial merge(const Monomial& a, const Monomial& b) {
    Monomial m(a.width());
    for (std::size_t i = 0; i < a.width(); ++i) m[i] = a[i] + b[i];
    return m;
}

inline void add_term(TermMap& out, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

inline TermMap map_mul(const Chart& c, const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            int s = merge_sign(c, ma, mb);
            if (s == 0) continue;
            add_term(out, merge(ma, mb), s < 0 ? Rational(-ca * cb) : Rational(ca * cb));
        }
    return out;
}

// Exact division of num by an even-variables-only divisor, by leading-term
// elimination in the graded order.  Returns nothing when not divisible.
inline std::optional<TermMap> try_divide(const Chart&, TermMap num, const TermMap& d) {
    if (d.empty()) throw Error("division by zero polynomial");
    const auto& [dm, dc] = *d.rbegin();  // leading term of d
    TermMap q;
    while (!num.empty()) {
        const auto& [nm, nc] = *num.rbegin();
        Monomial qm(nm.width());
        for (std::size_t i = 0; i < nm.width(); ++i) {
            if (nm[i] < dm[i]) return std::nullopt;
            qm[i] = nm[i] - dm[i];
        }
        Rational qc = nc / dc;
        add_term(q, qm, qc);
        // num -= (qc * qm) * d   (divisor is even-only: no Koszul signs)
        for (const auto& [m2, c2] : d) add_term(num, merge(qm, m2), -qc * c2);
    }
    return q;
}

inline std::vector<std::uint32_t> add_exps(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SuperPoly: normal-ordered supercommutative polynomial with exact rational
// coefficients over a chart, optionally divided by a product of the chart's
// declared denominators.  The representation is canonical: no zero
// coefficients, no odd exponent above 1, and the numerator is not divisible
// by any denominator generator with positive exponent.  Structural equality
// is semantic equality.
// ---------------------------------------------------------------------------

class SuperPoly {
public:
    SuperPoly() = default;

    static SuperPoly zero(ChartPtr c) { return SuperPoly(std::move(c), TermMap{}, {}); }

    static SuperPoly constant(ChartPtr c, Rational v) {
        TermMap t;
        if (v != 0) t.emplace(Monomial(c->size()), std::move(v));
        return SuperPoly(std::move(c), std::move(t), {});
    }

    static SuperPoly variable(ChartPtr c, std::size_t i) {
        if (i >= c->size()) throw Error("variable index out of range");
        Monomial m(c->size());
        m[i] = 1;
        TermMap t;
        t.emplace(std::move(m), Rational(1));
        return SuperPoly(std::move(c), std::move(t), {});
    }

    static SuperPoly variable(const ChartPtr& c, std::string_view name) {
        return variable(c, c->index_of(name));
    }

    static SuperPoly from_terms(ChartPtr c, TermMap terms,
                                std::vector<std::uint32_t> den = {}) {
        TermMap clean;
        for (auto& [m, coef] : terms) {
            if (coef == 0) continue;
            if (m.width() != c->size()) throw Error("monomial width mismatch");
            bool vanishes = false;
            for (std::size_t i = 0; i < c->size(); ++i)
                if (m[i] > 1 && c->odd(i)) vanishes = true;  // odd square
            if (!vanishes) clean.emplace(m, coef);
        }
        SuperPoly p(std::move(c), std::move(clean), std::move(den));
        p.reduce();
        return p;
    }

    const ChartPtr& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    const std::vector<std::uint32_t>& denominator_exponents() const { return den_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    // Coefficient of the constant monomial of the numerator.
    Rational constant_term() const {
        if (terms_.empty()) return 0;
        const auto& [m, c] = *terms_.begin();
        return m.is_constant() ? c : Rational(0);
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::uint64_t degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }

    bool has_denominator() const {
        for (auto e : den_)
            if (e) return true;
        return false;
    }

    // --- grading -----------------------------------------------------------

    bool has_parity(Parity p) const {
        for (const auto& [m, c] : terms_)
            if (chart_->monomial_parity(m) != p) return false;
        return true;
    }
    bool is_homogeneous() const {
        return terms_.empty() || has_parity(chart_->monomial_parity(terms_.begin()->first));
    }
    // Parity of a homogeneous polynomial; zero counts as even.
    Parity parity() const {
        if (terms_.empty()) return Parity::Even;
        Parity p = chart_->monomial_parity(terms_.begin()->first);
        if (!has_parity(p)) throw Error("parity of a non-homogeneous polynomial");
        return p;
    }

    SuperPoly parity_part(Parity p) const {
        TermMap t;
        for (const auto& [m, c] : terms_)
            if (chart_->monomial_parity(m) == p) t.emplace(m, c);
        return SuperPoly(chart_, std::move(t), den_);
    }
    SuperPoly even_part() const { return parity_part(Parity::Even); }
    SuperPoly odd_part() const { return parity_part(Parity::Odd); }

    // The even-variables-only component ("body").  A polynomial is nilpotent
    // exactly when its body vanishes.
    SuperPoly body() const {
        TermMap t;
        for (const auto& [m, c] : terms_) {
            bool pure = true;
            for (std::size_t i = 0; i < chart_->size() && pure; ++i)
                if (m[i] && chart_->odd(i)) pure = false;
            if (pure) t.emplace(m, c);
        }
        return SuperPoly(chart_, std::move(t), den_);
    }
    bool is_nilpotent() const { return body().is_zero(); }

    // --- arithmetic ---------------------------------------------------------

    friend SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
        require_same_chart(a.chart_, b.chart_, "add");
        if (!a.has_denominator() && !b.has_denominator()) {
            TermMap t = a.terms_;
            for (const auto& [m, c] : b.terms_) detail::add_term(t, m, c);
            return SuperPoly(a.chart_, std::move(t), {});
        }
        // common denominator: componentwise max of the exponent vectors
        std::size_t n = std::max(a.den_.size(), b.den_.size());
        std::vector<std::uint32_t> common(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            common[i] = std::max(i < a.den_.size() ? a.den_[i] : 0,
                                 i < b.den_.size() ? b.den_[i] : 0);
        TermMap t = a.scaled_numerator(common);
        for (const auto& [m, c] : b.scaled_numerator(common)) detail::add_term(t, m, c);
        SuperPoly r(a.chart_, std::move(t), std::move(common));
        r.reduce();
        return r;
    }

    friend SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) { return a + (-b); }

    SuperPoly operator-() const {
        TermMap t;
        for (const auto& [m, c] : terms_) t.emplace(m, -c);
        return SuperPoly(chart_, std::move(t), den_);
    }

    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
        require_same_chart(a.chart_, b.chart_, "multiply");
        SuperPoly r(a.chart_, detail::map_mul(*a.chart_, a.terms_, b.terms_),
                    detail::add_exps(a.den_, b.den_));
        r.reduce();
        return r;
    }

    friend SuperPoly operator*(const Rational& s, const SuperPoly& p) {
        TermMap t;
        if (s != 0)
            for (const auto& [m, c] : p.terms_) t.emplace(m, s * c);
        SuperPoly r(p.chart_, std::move(t), p.den_);
        if (s == 0) r.den_.clear();
        return r;
    }
    friend SuperPoly operator*(const SuperPoly& p, const Rational& s) { return s * p; }

    SuperPoly& operator+=(const SuperPoly& o) { return *this = *this + o; }
    SuperPoly& operator-=(const SuperPoly& o) { return *this = *this - o; }
    SuperPoly& operator*=(const SuperPoly& o) { return *this = *this * o; }

    SuperPoly pow(std::uint32_t n) const {
        SuperPoly r = constant(chart_, 1);
        for (std::uint32_t k = 0; k < n; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
        if (a.chart_.get() != b.chart_.get() &&
            (!a.chart_ || !b.chart_ || !a.chart_->same_as(*b.chart_)))
            return false;
        return a.terms_ == b.terms_ && a.normalized_den() == b.normalized_den();
    }
    friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

    // --- calculus -----------------------------------------------------------

    // Left partial derivative: an odd variable is anticommuted to the leftmost
    // slot (collecting Koszul signs) and removed; even variables follow the
    // power rule.  For localized values the quotient rule applies.
    SuperPoly left_partial(std::size_t v) const {
        if (v >= chart_->size()) throw Error("left_partial: unknown variable");
        if (!has_denominator()) return SuperPoly(chart_, numerator_partial(v), {});
        SuperPoly r(chart_, numerator_partial(v), den_);
        r.reduce();
        if (!chart_->odd(v)) {
            // d(N/D) = dN/D - sum_i k_i * N * d(d_i) / (D * d_i)
            for (std::size_t i = 0; i < den_.size(); ++i) {
                if (den_[i] == 0) continue;
                const TermMap& di = chart_->denominators()[i];
                TermMap ddi;
                for (const auto& [m, c] : di)
                    if (m[v] > 0) {
                        Monomial mm = m;
                        mm[v] -= 1;
                        detail::add_term(ddi, mm, c * m[v]);
                    }
                if (ddi.empty()) continue;
                auto exps = den_;
                exps[i] += 1;
                SuperPoly piece(chart_, detail::map_mul(*chart_, terms_, ddi), exps);
                piece.reduce();
                r = r - Rational(den_[i]) * piece;
            }
        }
        return r;
    }

    SuperPoly left_partial(std::string_view var_name) const {
        return left_partial(chart_->index_of(var_name));
    }

private:
    SuperPoly(ChartPtr c, TermMap t, std::vector<std::uint32_t> den)
        : chart_(std::move(c)), terms_(std::move(t)), den_(std::move(den)) {
        if (terms_.empty()) den_.clear();
    }

    std::vector<std::uint32_t> normalized_den() const {
        std::vector<std::uint32_t> d = den_;
        while (!d.empty() && d.back() == 0) d.pop_back();
        return d;
    }

    // numerator rescaled so that the value equals (result) / den^common
    TermMap scaled_numerator(const std::vector<std::uint32_t>& common) const {
        TermMap t = terms_;
        for (std::size_t i = 0; i < common.size(); ++i) {
            std::uint32_t have = i < den_.size() ? den_[i] : 0;
            for (std::uint32_t k = have; k < common[i]; ++k)
                t = detail::map_mul(*chart_, t, chart_->denominators()[i]);
        }
        return t;
    }

    TermMap numerator_partial(std::size_t v) const {
        TermMap out;
        const bool odd_v = chart_->odd(v);
        for (const auto& [m, c] : terms_) {
            if (m[v] == 0) continue;
            Monomial mm = m;
            if (odd_v) {
                int swaps = 0;
                for (std::size_t j = 0; j < v; ++j)
                    if (chart_->odd(j) && m[j]) ++swaps;
                mm[v] = 0;
                detail::add_term(out, mm, (swaps & 1) ? -c : c);
            } else {
                mm[v] -= 1;
                detail::add_term(out, mm, c * m[v]);
            }
        }
        return out;
    }

    void reduce() {
        if (terms_.empty()) {
            den_.clear();
            return;
        }
        for (std::size_t i = 0; i < den_.size(); ++i) {
            while (den_[i] > 0) {
                auto q = detail::try_divide(*chart_, terms_, chart_->denominators()[i]);
                if (!q) break;
                terms_ = std::move(*q);
                --den_[i];
            }
        }
        while (!den_.empty() && den_.back() == 0) den_.pop_back();
    }

    ChartPtr chart_;
    TermMap terms_;
    std::vector<std::uint32_t> den_;  // exponents over chart()->denominators()
};

// Spec-facing names.
inline SuperPoly multiply(const SuperPoly& f, const SuperPoly& g) { return f * g; }
inline SuperPoly left_partial(const SuperPoly& f, std::size_t v) { return f.left_partial(v); }
inline SuperPoly left_partial(const SuperPoly& f, std::string_view v) {
    return f.left_partial(v);
}

// True when f has parity p; the zero polynomial matches any parity.
inline bool admits_parity(const SuperPoly& f, Parity p) { return f.has_parity(p); }

}  // namespace sgv
