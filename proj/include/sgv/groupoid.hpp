#pragma once

#include "sgv/laplace.hpp"

namespace sgv {

// An arrow rho -> e^sigma rho of the master groupoid.  Validity is the
// polynomial master condition H(target, source) = 0, equivalent to
// Delta_rho e^{sigma/2} = 0.
struct GroupoidArrow {
    StructureTensor tensor;
    VolumeForm source;
    SuperPoly shift;  // even

    static GroupoidArrow make(StructureTensor tensor, VolumeForm source, SuperPoly shift) {
        require_same_chart(source.chart, tensor.chart(), "groupoid arrow");
        require_same_chart(shift.chart(), tensor.chart(), "groupoid arrow");
        if (!shift.has_parity(Parity::Even))
            throw Error("groupoid arrow: shift must be even");
        return {std::move(tensor), std::move(source), std::move(shift)};
    }

    VolumeForm target() const {
        return VolumeForm::make(source.chart, source.sigma + shift);
    }
};

struct ArrowCheck {
    bool valid = false;
    SuperPoly residual;  // H(target, source); zero iff valid
};

inline ArrowCheck arrow_valid(const GroupoidArrow& a) {
    if (!check_jacobi(a.tensor).holds)
        throw Error("arrow_valid: tensor fails Jacobi");
    SuperPoly h = cocycle_H(a.tensor, a.target(), a.source);
    return {h.is_zero(), std::move(h)};
}

inline GroupoidArrow compose(const GroupoidArrow& a1, const GroupoidArrow& a2) {
    if (!(a2.source == a1.target()))
        throw Error("compose: a2's source is not a1's target");
    if (!arrow_valid(a1).valid || !arrow_valid(a2).valid)
        throw Error("compose: invalid input arrow");
    GroupoidArrow c = GroupoidArrow::make(a1.tensor, a1.source, a1.shift + a2.shift);
    if (!arrow_valid(c).valid)
        throw Error("compose: composite fails the master condition (internal bug)");
    return c;
}

inline GroupoidArrow invert(const GroupoidArrow& a) {
    if (!arrow_valid(a).valid) throw Error("invert: invalid input arrow");
    GroupoidArrow inv = GroupoidArrow::make(a.tensor, a.target(), -a.shift);
    if (!arrow_valid(inv).valid)
        throw Error("invert: inverse fails the master condition (internal bug)");
    return inv;
}

// A Casimir has a vanishing Hamiltonian vector field.
inline bool is_casimir(const StructureTensor& t, const SuperPoly& f) {
    if (!is_poisson(t.kind())) throw Error("is_casimir: Poisson kinds only");
    return hamiltonian_field(t, f).is_zero();
}

// Orbit-level invariants of an arrow (valid or not):
//   (i)   the modular fields of source and target coincide;
//   (ii)  the half-density Laplacians for source and target agree on all
//         probes (their difference is -1/2 H(target, source));
//   (iii) when (i) holds, H(target, source) is a Casimir.
struct OrbitReport {
    bool arrow_is_valid = false;
    bool modular_fields_equal = false;
    bool half_density_ops_equal = false;
    bool casimir_checked = false;  // (iii) runs only when (i) holds
    bool cocycle_is_casimir = false;
    SuperPoly half_density_residual;  // -1/2 H(target, source)
};

inline OrbitReport orbit_invariant_check(const StructureTensor& t, const GroupoidArrow& a) {
    OrbitReport r;
    VolumeForm src = a.source, tgt = a.target();
    SuperPoly h = cocycle_H(t, tgt, src);
    r.arrow_is_valid = h.is_zero();
    r.modular_fields_equal = modular_field(t, src) == modular_field(t, tgt);
    r.half_density_residual = Rational(-1, 2) * h;
    // operators compared via their action on coefficients relative to src
    r.half_density_ops_equal = true;
    for (const SuperPoly& s : detail::quadratic_probes(t.chart())) {
        Density d = Density::make(Rational(1, 2), s, src);
        SuperPoly lhs = laplace_density(t, tgt, d).coeff;
        SuperPoly rhs = laplace_density(t, src, d).coeff;
        if (!(lhs - rhs == r.half_density_residual * s)) {
            r.half_density_ops_equal = false;
            throw Error("orbit_invariant_check: half-density shift law violated (internal bug)");
        }
        if (!(lhs == rhs)) r.half_density_ops_equal = false;
    }
    if (r.modular_fields_equal) {
        r.casimir_checked = true;
        r.cocycle_is_casimir = is_casimir(t, h);
    }
    return r;
}

}  // namespace sgv
