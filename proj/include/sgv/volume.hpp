#pragma once

#include "sgv/series.hpp"
#include "sgv/tensor.hpp"

namespace sgv {

// rho = e^sigma Dx, stored by its even log-density relative to the chart's
// coordinate volume.  The exponential is never materialized.
struct VolumeForm {
    ChartPtr chart;
    SuperPoly sigma;

    static VolumeForm make(ChartPtr chart, SuperPoly sigma) {
        require_same_chart(sigma.chart(), chart, "volume form");
        if (!sigma.has_parity(Parity::Even))
            throw Error("volume log-density must be even");
        return {std::move(chart), std::move(sigma)};
    }

    static VolumeForm coordinate(ChartPtr chart) {
        SuperPoly z = SuperPoly::zero(chart);
        return {std::move(chart), std::move(z)};
    }

    friend bool operator==(const VolumeForm& a, const VolumeForm& b) {
        return a.sigma == b.sigma;
    }
};

// div_rho X = (-1)^{a~(X~+1)} [ d_a X^a + (d_a sigma) X^a ]
inline SuperPoly divergence(const VolumeForm& rho, const VectorField& x) {
    require_same_chart(rho.chart, x.chart, "divergence");
    SuperPoly acc = SuperPoly::zero(rho.chart);
    for (std::size_t a = 0; a < rho.chart->size(); ++a) {
        SuperPoly term = x.comps[a].left_partial(a) + rho.sigma.left_partial(a) * x.comps[a];
        int s = koszul(rho.chart->parity(a), x.parity + Parity::Odd);
        acc = s < 0 ? acc - term : acc + term;
    }
    return acc;
}

// s * rho^w: a weight-w density with coefficient s relative to a reference
// volume form.  w = 0 are functions, w = 1/2 half-densities, w = 1 volumes.
struct Density {
    Rational weight;
    SuperPoly coeff;
    VolumeForm reference;

    static Density make(Rational weight, SuperPoly coeff, VolumeForm reference) {
        require_same_chart(coeff.chart(), reference.chart, "density");
        return {std::move(weight), std::move(coeff), std::move(reference)};
    }

    friend bool operator==(const Density& a, const Density& b) {
        return a.weight == b.weight && a.coeff == b.coeff && a.reference == b.reference;
    }
};

// Rebase a density to another reference volume.  Lawful only when
// w * (sigma_old - sigma_new) is nilpotent, so the exponential stays
// polynomial.
inline Density rebase(const Density& d, const VolumeForm& new_ref) {
    require_same_chart(d.reference.chart, new_ref.chart, "rebase");
    SuperPoly delta = d.weight * (d.reference.sigma - new_ref.sigma);
    if (delta.is_zero()) return Density::make(d.weight, d.coeff, new_ref);
    if (!delta.is_nilpotent())
        throw Error("rebase: w * (sigma difference) has nonzero body");
    return Density::make(d.weight, d.coeff * exp_nilpotent(delta), new_ref);
}

// L_X (s rho^w) = (X s + (-1)^{X~ s~} w s div_rho X) rho^w
inline Density lie_derivative_density(const VectorField& x, const Density& d) {
    require_same_chart(x.chart, d.reference.chart, "lie_derivative_density");
    detail::require_homogeneous(d.coeff, "lie_derivative_density");
    SuperPoly xs = lie_derivative(x, d.coeff);
    if (d.weight != 0) {
        SuperPoly div = divergence(d.reference, x);
        int s = d.coeff.is_zero() ? 1 : koszul(x.parity, d.coeff.parity());
        SuperPoly extra = d.weight * (d.coeff * div);
        xs = s < 0 ? xs - extra : xs + extra;
    }
    return Density::make(d.weight, std::move(xs), d.reference);
}

}  // namespace sgv
