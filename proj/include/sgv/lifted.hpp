#pragma once

#include <utility>

#include "sgv/poly.hpp"

namespace sgv {

enum class FiberShift : unsigned char {
    None,            // T*M: parity(p_a) = parity(x^a)
    ParityReversed,  // Pi T*M: parity(x*_a) = parity(x^a) + 1
};

// Fiberwise-polynomial functions on T*M or Pi T*M live over the total chart
// [base variables..., fiber variables...], one fiber variable per base one.
class LiftedChart {
public:
    static LiftedChart make(ChartPtr base, FiberShift shift) {
        std::vector<Variable> vars = base->variables();
        for (const auto& v : base->variables()) {
            Variable f;
            f.name = shift == FiberShift::None ? "p_" + v.name : v.name + "_ast";
            f.parity = shift == FiberShift::None ? v.parity : v.parity + Parity::Odd;
            if (base->find(f.name))
                throw Error("lifted chart: fiber name '" + f.name + "' collides with base");
            vars.push_back(std::move(f));
        }
        // widen declared denominators to the total chart
        std::vector<TermMap> dens;
        for (const TermMap& d : base->denominators()) {
            TermMap w;
            for (const auto& [m, c] : d) {
                Monomial mm(vars.size());
                for (std::size_t i = 0; i < base->size(); ++i) mm[i] = m[i];
                w.emplace(std::move(mm), c);
            }
            dens.push_back(std::move(w));
        }
        LiftedChart lc;
        lc.base_ = std::move(base);
        lc.shift_ = shift;
        lc.total_ = Chart::make(std::move(vars), {}, std::move(dens));
        return lc;
    }

    const ChartPtr& base() const { return base_; }
    const ChartPtr& total() const { return total_; }
    FiberShift shift() const { return shift_; }
    std::size_t dim() const { return base_->size(); }
    std::size_t fiber_index(std::size_t base_index) const { return dim() + base_index; }

    SuperPoly fiber_var(std::size_t base_index) const {
        return SuperPoly::variable(total_, fiber_index(base_index));
    }
    SuperPoly base_var(std::size_t base_index) const {
        return SuperPoly::variable(total_, base_index);
    }

    SuperPoly include(const SuperPoly& f) const {
        require_same_chart(f.chart(), base_, "lift include");
        TermMap t;
        for (const auto& [m, c] : f.terms()) {
            Monomial mm(total_->size());
            for (std::size_t i = 0; i < base_->size(); ++i) mm[i] = m[i];
            t.emplace(std::move(mm), c);
        }
        return SuperPoly::from_terms(total_, std::move(t),
                                     std::vector<std::uint32_t>(f.denominator_exponents()));
    }

    std::uint64_t fiber_degree(const Monomial& m) const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < dim(); ++i) d += m[fiber_index(i)];
        return d;
    }

    bool fiber_free(const SuperPoly& f) const {
        for (const auto& [m, c] : f.terms())
            if (fiber_degree(m) != 0) return false;
        return true;
    }

    SuperPoly restrict_to_base(const SuperPoly& f) const {
        require_same_chart(f.chart(), total_, "restrict_to_base");
        TermMap t;
        for (const auto& [m, c] : f.terms()) {
            if (fiber_degree(m) != 0)
                throw Error("restrict_to_base: value depends on fiber variables");
            Monomial mm(base_->size());
            for (std::size_t i = 0; i < base_->size(); ++i) mm[i] = m[i];
            t.emplace(std::move(mm), c);
        }
        return SuperPoly::from_terms(base_, std::move(t),
                                     std::vector<std::uint32_t>(f.denominator_exponents()));
    }

private:
    ChartPtr base_;
    ChartPtr total_;
    FiberShift shift_ = FiberShift::None;
};

namespace detail {

inline SuperPoly canonical_bracket_homogeneous(const LiftedChart& lc, const SuperPoly& f,
                                               const SuperPoly& g) {
    // With left derivatives throughout:
    //   (F,G)   = (-1)^{a~(F~+1)}     dF/dp_a  dG/dx^a - (-1)^{a~F~}     dF/dx^a dG/dp_a
    //   [[F,G]] = (-1)^{(a~+1)(F~+1)} dF/dx*_a dG/dx^a - (-1)^{a~(F~+1)} dF/dx^a dG/dx*_a
    // These are the unique sign choices for which the bracket is a graded
    // biderivation satisfying its (anti)symmetry, Jacobi, the coordinate
    // pairings, and the double-bracket form of the tensor brackets.
    Parity pf = f.parity();
    SuperPoly acc = SuperPoly::zero(lc.total());
    const bool shifted = lc.shift() == FiberShift::ParityReversed;
    for (std::size_t a = 0; a < lc.dim(); ++a) {
        std::size_t fa = lc.fiber_index(a);
        Parity pa = lc.base()->parity(a);
        int s1 = shifted ? koszul(pa + Parity::Odd, pf + Parity::Odd)
                         : koszul(pa, pf + Parity::Odd);
        int s2 = shifted ? -koszul(pa, pf + Parity::Odd) : -koszul(pa, pf);
        SuperPoly t1 = f.left_partial(fa) * g.left_partial(a);
        SuperPoly t2 = f.left_partial(a) * g.left_partial(fa);
        acc = (s1 < 0) ? acc - t1 : acc + t1;
        acc = (s2 < 0) ? acc - t2 : acc + t2;
    }
    return acc;
}

}  // namespace detail

// Canonical even Poisson bracket (T*M) or canonical Schouten bracket
// (Pi T*M).  The signs depend on the first argument's parity only, so the
// extension to non-homogeneous arguments splits the first slot.
inline SuperPoly canonical_bracket(const LiftedChart& lc, const SuperPoly& f,
                                   const SuperPoly& g) {
    require_same_chart(f.chart(), lc.total(), "canonical_bracket");
    require_same_chart(g.chart(), lc.total(), "canonical_bracket");
    SuperPoly acc = SuperPoly::zero(lc.total());
    for (Parity pf : {Parity::Even, Parity::Odd}) {
        SuperPoly fp = f.parity_part(pf);
        if (fp.is_zero()) continue;
        acc += detail::canonical_bracket_homogeneous(lc, fp, g);
    }
    return acc;
}

// Schouten-Lichnerowicz differential D = (S, . ).  Requires (S,S) = 0.
inline SuperPoly sl_differential(const LiftedChart& lc, const SuperPoly& s,
                                 const SuperPoly& f) {
    if (!canonical_bracket(lc, s, s).is_zero())
        throw Error("sl_differential: (S,S) != 0, differential is not defined");
    return canonical_bracket(lc, s, f);
}

}  // namespace sgv
