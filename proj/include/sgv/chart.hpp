#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgv/error.hpp"
#include "sgv/rational.hpp"

namespace sgv {

// ---------------------------------------------------------------------------
// Parity
// ---------------------------------------------------------------------------

enum class Parity : unsigned char { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 1u);
}

constexpr bool is_odd(Parity p) { return p == Parity::Odd; }

// (-1)^{pq}
constexpr int koszul(Parity p, Parity q) { return (is_odd(p) && is_odd(q)) ? -1 : 1; }

inline const char* name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

struct Variable {
    std::string name;
    Parity parity = Parity::Even;
};

inline bool operator==(const Variable& a, const Variable& b) {
    return a.name == b.name && a.parity == b.parity;
}

// ---------------------------------------------------------------------------
// Monomial: one exponent per chart variable, in chart order.  Odd exponents
// are always 0 or 1 once a monomial is inside a polynomial.
// ---------------------------------------------------------------------------

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t width) : e_(width, 0) {}

    std::size_t width() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }
    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    std::vector<std::uint32_t> e_;
};

// Graded order; ties broken so that within a degree the monomial with the
// larger leading exponents comes first (1, x, theta, x^2, x*theta, ...).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.width() && i < b.width(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

using TermMap = std::map<Monomial, Rational, MonomialOrder>;

// ---------------------------------------------------------------------------
// Chart: an ordered list of graded variables.  The order fixes the canonical
// normal form of monomials and every Koszul sign downstream.  A chart may
// additionally declare
//   * Darboux pairs (even index, odd index) — consumed by the coordinate
//     Delta_0 operator and the BV-lemma checks;
//   * denominators — even-variables-only polynomials that generate the
//     multiplicative set the chart is localized at.  Polynomials over a
//     localized chart may carry one denominator from that set.
// ---------------------------------------------------------------------------

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

class Chart {
public:
    static ChartPtr make(std::vector<Variable> vars,
                         std::vector<std::pair<std::size_t, std::size_t>> darboux_pairs = {},
                         std::vector<TermMap> denominators = {}) {
        if (vars.empty()) throw Error("chart needs at least one variable");
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i].name == vars[j].name)
                    throw Error("duplicate variable name '" + vars[i].name + "' in chart");
        for (auto [e, o] : darboux_pairs) {
            if (e >= vars.size() || o >= vars.size())
                throw Error("darboux pair index out of range");
            if (vars[e].parity != Parity::Even || vars[o].parity != Parity::Odd)
                throw Error("darboux pair must be (even variable, odd variable)");
        }
        for (const TermMap& d : denominators) {
            if (d.empty()) throw Error("declared denominator is zero");
            bool constant_only = true;
            for (const auto& [m, c] : d) {
                if (m.width() != vars.size()) throw Error("denominator width mismatch");
                if (!m.is_constant()) constant_only = false;
                for (std::size_t i = 0; i < vars.size(); ++i)
                    if (m[i] > 0 && vars[i].parity == Parity::Odd)
                        throw Error("declared denominators must use even variables only");
            }
            if (constant_only) throw Error("constant denominators need not be declared");
        }
        return ChartPtr(new Chart(std::move(vars), std::move(darboux_pairs), std::move(denominators)));
    }

    const std::vector<Variable>& variables() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_[i]; }
    Parity parity(std::size_t i) const { return vars_[i].parity; }
    bool odd(std::size_t i) const { return vars_[i].parity == Parity::Odd; }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return i;
        return std::nullopt;
    }
    std::size_t index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw Error("unknown variable '" + std::string(name) + "'");
    }

    const std::vector<std::pair<std::size_t, std::size_t>>& darboux_pairs() const {
        return pairs_;
    }
    bool darboux_paired() const { return !pairs_.empty(); }

    const std::vector<TermMap>& denominators() const { return dens_; }
    bool localized() const { return !dens_.empty(); }

    std::size_t odd_count() const {
        std::size_t n = 0;
        for (const auto& v : vars_) n += v.parity == Parity::Odd;
        return n;
    }

    // Structural equality; values over structurally equal charts interoperate.
    bool same_as(const Chart& o) const {
        return vars_ == o.vars_ && dens_ == o.dens_;
    }

    Parity monomial_parity(const Monomial& m) const {
        unsigned p = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (odd(i)) p += m[i];
        return static_cast<Parity>(p & 1u);
    }

private:
    Chart(std::vector<Variable> v, std::vector<std::pair<std::size_t, std::size_t>> p,
          std::vector<TermMap> d)
        : vars_(std::move(v)), pairs_(std::move(p)), dens_(std::move(d)) {}

    std::vector<Variable> vars_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<TermMap> dens_;
};

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* where) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) throw Error(std::string(where) + ": chart mismatch");
}

}  // namespace sgv
