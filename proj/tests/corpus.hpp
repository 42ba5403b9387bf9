#pragma once

// Shared structures used across the test suites: the Darboux charts, the
// linear Schouten structure, the constant even Poisson bivector, the two
// Riemannian examples, and the Jacobi-breaking perturbation.

#include "sgv/laplace.hpp"
#include "sgv/parse.hpp"

namespace corpus {

using namespace sgv;

inline ChartPtr chart11() {
    return Chart::make({{"x", Parity::Even}, {"theta", Parity::Odd}}, {{0, 1}});
}

inline ChartPtr chart22() {
    return Chart::make({{"x1", Parity::Even},
                        {"x2", Parity::Even},
                        {"theta1", Parity::Odd},
                        {"theta2", Parity::Odd}},
                       {{0, 2}, {1, 3}});
}

// Darboux 1|1 plus one extra odd variable ("odd constant") no tensor entry
// touches.
inline ChartPtr chart11_nu() {
    return Chart::make({{"x", Parity::Even}, {"theta", Parity::Odd}, {"nu", Parity::Odd}},
                       {{0, 1}});
}

inline StructureTensor darboux11() { return darboux_tensor(chart11()); }
inline StructureTensor darboux22() { return darboux_tensor(chart22()); }
inline StructureTensor darboux11_nu() { return darboux_tensor(chart11_nu()); }

// {theta, x} = x, all other brackets zero.
inline StructureTensor linear_schouten11() {
    ChartPtr c = chart11();
    return StructureTensor::from_sparse(
        c, GeometryKind::OddPoisson,
        {{{0, 1}, parse_expression("x", c)}});
}

// Constant bivector on R^2.
inline StructureTensor even_poisson_r2() {
    ChartPtr c = Chart::make({{"x1", Parity::Even}, {"x2", Parity::Even}});
    return StructureTensor::from_sparse(
        c, GeometryKind::EvenPoisson,
        {{{0, 1}, SuperPoly::constant(c, 1)}});
}

// g^{xx} = 1 on R^1.
inline StructureTensor riemannian_r1() {
    ChartPtr c = Chart::make({{"x", Parity::Even}});
    return StructureTensor::from_sparse(
        c, GeometryKind::EvenRiemannian,
        {{{0, 0}, SuperPoly::constant(c, 1)}});
}

// Mixed 1|2 metric: g^{xx} = 1, g^{theta1 theta2} = 1 = -g^{theta2 theta1}.
inline StructureTensor riemannian_mixed12() {
    ChartPtr c = Chart::make(
        {{"x", Parity::Even}, {"theta1", Parity::Odd}, {"theta2", Parity::Odd}});
    return StructureTensor::from_sparse(
        c, GeometryKind::EvenRiemannian,
        {{{0, 0}, SuperPoly::constant(c, 1)}, {{1, 2}, SuperPoly::constant(c, 1)}});
}

// Constant odd bivector on a 1|1 chart: chi^{x theta} = 1.
inline StructureTensor odd_riemannian11() {
    ChartPtr c = chart11();
    return StructureTensor::from_sparse(
        c, GeometryKind::OddRiemannian,
        {{{0, 1}, SuperPoly::constant(c, 1)}});
}

// Darboux 2|2 with a parity-valid perturbation chosen to break Jacobi.
inline StructureTensor broken22() {
    ChartPtr c = chart22();
    auto entries = std::vector<std::pair<std::pair<std::size_t, std::size_t>, SuperPoly>>{
        {{0, 2}, SuperPoly::constant(c, 1)},
        {{1, 3}, SuperPoly::constant(c, 1)},
        {{0, 3}, parse_expression("x1", c)},
    };
    return StructureTensor::from_sparse(c, GeometryKind::OddPoisson, entries);
}

inline SuperPoly P(const ChartPtr& c, const std::string& s) { return parse_expression(s, c); }

}  // namespace corpus
