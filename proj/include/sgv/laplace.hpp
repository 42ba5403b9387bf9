#pragma once

#include "sgv/volume.hpp"

namespace sgv {

// ---------------------------------------------------------------------------
// Laplacians on functions
// ---------------------------------------------------------------------------

// Delta_rho f = div_rho X_f ("div grad").  Second order for the symmetric
// kinds (odd Poisson, even Riemannian), first order for the antisymmetric
// ones.  The coordinate expansion is a verified consequence, never the
// definition.
inline SuperPoly laplace_fn(const StructureTensor& t, const VolumeForm& rho,
                            const SuperPoly& f) {
    require_same_chart(rho.chart, t.chart(), "laplace_fn");
    return divergence(rho, hamiltonian_field(t, f));
}

// Coordinate Delta-operator on a Darboux-paired chart: 2 sum_i d^2/dx^i dtheta_i.
inline SuperPoly coordinate_delta0(const ChartPtr& chart, const SuperPoly& f) {
    require_same_chart(f.chart(), chart, "coordinate_delta0");
    if (!chart->darboux_paired())
        throw Error("coordinate_delta0: chart is not Darboux-paired");
    SuperPoly acc = SuperPoly::zero(chart);
    for (auto [e, o] : chart->darboux_pairs())
        acc += Rational(2) * f.left_partial(o).left_partial(e);
    return acc;
}

// The canonical odd Laplacian on half-densities of a Darboux-paired chart:
// Delta_0 on the coefficient taken in the coordinate reference.
inline Density coordinate_delta0(const ChartPtr& chart, const Density& d) {
    if (d.weight != Rational(1, 2))
        throw Error("coordinate_delta0: density must have weight 1/2");
    if (!d.reference.sigma.is_zero())
        throw Error("coordinate_delta0: coefficient must be taken in the coordinate volume");
    return Density::make(d.weight, coordinate_delta0(chart, d.coeff), d.reference);
}

// The Darboux structure tensor of a paired chart: {theta_i, x^j} = delta_i^j,
// i.e. S^{x^i theta_i} = S^{theta_i x^i} = 1.
inline StructureTensor darboux_tensor(const ChartPtr& chart) {
    if (!chart->darboux_paired()) throw Error("darboux_tensor: chart is not Darboux-paired");
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, SuperPoly>> entries;
    for (auto [e, o] : chart->darboux_pairs())
        entries.push_back({{e, o}, SuperPoly::constant(chart, 1)});
    return StructureTensor::from_sparse(chart, GeometryKind::OddPoisson, entries);
}

// ---------------------------------------------------------------------------
// The cocycle H and Laplacians on weight-w densities
// ---------------------------------------------------------------------------

// H(rho', rho) = Delta_rho sigma -+ 1/2 {sigma, sigma}  with sigma the log
// ratio of the volumes, the bracket sign chosen per kind (odd Poisson carries
// -1/2, even Riemannian +1/2); both equal 2 e^{-sigma/2} Delta_rho e^{sigma/2}.
inline SuperPoly cocycle_H(const StructureTensor& t, const VolumeForm& rho_new,
                           const VolumeForm& rho_old) {
    require_same_chart(rho_new.chart, rho_old.chart, "cocycle_H");
    require_same_chart(rho_new.chart, t.chart(), "cocycle_H");
    SuperPoly sigma = rho_new.sigma - rho_old.sigma;
    SuperPoly half_bracket = Rational(1, 2) * bracket(t, sigma, sigma);
    switch (t.kind()) {
        case GeometryKind::OddPoisson:
            return laplace_fn(t, rho_old, sigma) - half_bracket;
        case GeometryKind::EvenRiemannian:
            return laplace_fn(t, rho_old, sigma) + half_bracket;
        default:
            throw Error("cocycle_H: no half-density cocycle for kind " +
                        std::string(name(t.kind())));
    }
}

// Laplacian on weight-w densities, Delta_rho (s rho^w) = (Delta_rho s) rho^w.
// The result keeps the input's reference:
//   * reference == rho: the defining formula;
//   * w == 1/2: the reference-covariant shift
//         (Delta_{rho0} s - 1/2 H(rho, rho0) s) rho0^{1/2},
//     polynomial for every pair of volumes;
//   * otherwise: rebase in, apply, rebase back (lawful rebases only).
inline Density laplace_density(const StructureTensor& t, const VolumeForm& rho,
                               const Density& d) {
    require_same_chart(rho.chart, d.reference.chart, "laplace_density");
    if (d.reference == rho)
        return Density::make(d.weight, laplace_fn(t, rho, d.coeff), d.reference);
    if (d.weight == Rational(1, 2)) {
        SuperPoly shifted = laplace_fn(t, d.reference, d.coeff) -
                            Rational(1, 2) * (cocycle_H(t, rho, d.reference) * d.coeff);
        return Density::make(d.weight, std::move(shifted), d.reference);
    }
    Density in = rebase(d, rho);
    Density out = Density::make(d.weight, laplace_fn(t, rho, in.coeff), rho);
    return rebase(out, d.reference);
}

// ---------------------------------------------------------------------------
// Modular field
// ---------------------------------------------------------------------------

// The square of the odd Laplacian, extracted as a vector field and validated
// as a derivation on all quadratic coordinate probes.  For the even Poisson
// kind the Laplacian itself is the first-order modular field.
inline VectorField modular_field(const StructureTensor& t, const VolumeForm& rho) {
    if (!is_poisson(t.kind())) throw Error("modular_field: Poisson kinds only");
    const ChartPtr& chart = t.chart();
    std::size_t n = chart->size();
    auto op = [&](const SuperPoly& f) {
        SuperPoly r = laplace_fn(t, rho, f);
        if (t.kind() == GeometryKind::OddPoisson) r = laplace_fn(t, rho, r);
        return r;
    };
    std::vector<SuperPoly> comps;
    comps.reserve(n);
    for (std::size_t a = 0; a < n; ++a) comps.push_back(op(SuperPoly::variable(chart, a)));
    Parity parity =
        t.kind() == GeometryKind::OddPoisson ? Parity::Even : structure_parity(t.kind());
    VectorField y = VectorField::make(chart, parity, std::move(comps));
    // first-order validation: the operator agrees with the extracted field on
    // every quadratic probe
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            SuperPoly probe =
                SuperPoly::variable(chart, a) * SuperPoly::variable(chart, b);
            if (probe.is_zero()) continue;
            if (!(op(probe) == lie_derivative(y, probe)))
                throw Error("modular_field: operator is not first order (internal bug)");
        }
    if (!op(SuperPoly::constant(chart, 1)).is_zero())
        throw Error("modular_field: operator does not kill constants (internal bug)");
    return y;
}

// ---------------------------------------------------------------------------
// Weight-w commutator defect
// ---------------------------------------------------------------------------

// Evaluates [Delta_rho, f] - 2 L_{X_f} on every weight-w probe density of
// degree <= 2, asserts the residual operator is multiplication by a single
// function and returns that function; it equals (1 - 2w) Delta_rho f.
inline SuperPoly commutator_defect(const StructureTensor& t, const VolumeForm& rho,
                                   const Rational& w, const SuperPoly& f);

namespace detail {

// probes for commutator_defect: monomials of total degree <= 2
inline std::vector<SuperPoly> quadratic_probes(const ChartPtr& chart) {
    std::vector<SuperPoly> probes;
    probes.push_back(SuperPoly::constant(chart, 1));
    for (std::size_t a = 0; a < chart->size(); ++a)
        probes.push_back(SuperPoly::variable(chart, a));
    for (std::size_t a = 0; a < chart->size(); ++a)
        for (std::size_t b = a; b < chart->size(); ++b) {
            SuperPoly p = SuperPoly::variable(chart, a) * SuperPoly::variable(chart, b);
            if (!p.is_zero()) probes.push_back(p);
        }
    return probes;
}

}  // namespace detail

inline SuperPoly commutator_defect(const StructureTensor& t, const VolumeForm& rho,
                                   const Rational& w, const SuperPoly& f) {
    require_same_chart(rho.chart, t.chart(), "commutator_defect");
    detail::require_homogeneous(f, "commutator_defect");
    VectorField xf = hamiltonian_field(t, f);
    auto defect = [&](const SuperPoly& s) {
        // [Delta, f] s = Delta(f s) - (-1)^{Delta~ f~} f Delta(s)
        Density ds = Density::make(w, s, rho);
        Density fd = Density::make(w, f * s, rho);
        SuperPoly commutator_part = laplace_density(t, rho, fd).coeff;
        SuperPoly back = f * laplace_density(t, rho, ds).coeff;
        commutator_part =
            koszul(f.parity(), t.parity()) < 0 ? commutator_part + back : commutator_part - back;
        return commutator_part - Rational(2) * lie_derivative_density(xf, ds).coeff;
    };
    SuperPoly c = defect(SuperPoly::constant(t.chart(), 1));
    for (const SuperPoly& s : detail::quadratic_probes(t.chart()))
        if (!(defect(s) == c * s))
            throw Error("commutator_defect: residual is not a multiplication operator");
    return c;
}

}  // namespace sgv
