#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "sgv/probe.hpp"

using namespace sgv;
using corpus::P;

namespace {

// Direct odd-bracket formula of the Schouten tensor (the closed form the
// double bracket must reproduce).
SuperPoly direct_odd_bracket(const StructureTensor& t, const SuperPoly& f,
                             const SuperPoly& g) {
    SuperPoly acc = SuperPoly::zero(t.chart());
    for (std::size_t a = 0; a < t.chart()->size(); ++a) {
        int sign = -koszul(f.parity(), t.chart()->parity(a) + Parity::Odd);
        for (std::size_t b = 0; b < t.chart()->size(); ++b) {
            if (t.entry(a, b).is_zero()) continue;
            SuperPoly term = t.entry(a, b) * f.left_partial(b) * g.left_partial(a);
            acc = sign < 0 ? acc - term : acc + term;
        }
    }
    return acc;
}

// Y is a derivation of the bracket: Y{f,g} = {Yf,g} + (-1)^{Y~(f~+1)}{f,Yg}.
bool direct_poisson_field_law(const StructureTensor& t, const VectorField& y) {
    const ChartPtr& c = t.chart();
    for (std::size_t a = 0; a < c->size(); ++a)
        for (std::size_t b = 0; b < c->size(); ++b) {
            SuperPoly f = SuperPoly::variable(c, a), g = SuperPoly::variable(c, b);
            SuperPoly lhs = lie_derivative(y, bracket(t, f, g));
            SuperPoly rhs = bracket(t, lie_derivative(y, f), g);
            SuperPoly second = bracket(t, f, lie_derivative(y, g));
            int s = koszul(y.parity, c->parity(a) + Parity::Odd);
            rhs = s < 0 ? rhs - second : rhs + second;
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("lift_tensor: Darboux, zero, and metric examples") {
    auto s = corpus::darboux11();
    auto lt = lift_tensor(s);
    REQUIRE_FALSE(lt.hamiltonian.is_zero());
    CHECK(lt.hamiltonian.has_parity(Parity::Odd));
    for (const auto& [m, c] : lt.hamiltonian.terms())
        CHECK(lt.chart.fiber_degree(m) == 2);

    auto z = StructureTensor::zero(corpus::chart11(), GeometryKind::OddPoisson);
    CHECK(lift_tensor(z).hamiltonian.is_zero());

    auto g = corpus::riemannian_r1();
    auto lg = lift_tensor(g);
    CHECK(lg.hamiltonian ==
          Rational(1, 2) * lg.chart.fiber_var(0) * lg.chart.fiber_var(0));
    CHECK(lg.hamiltonian.has_parity(Parity::Even));

    // the table's parities: P and g lift even, S and chi lift odd
    CHECK(lift_tensor(corpus::even_poisson_r2()).hamiltonian.has_parity(Parity::Even));
    CHECK(lift_tensor(corpus::odd_riemannian11()).hamiltonian.has_parity(Parity::Odd));
}

TEST_CASE("canonical bracket: pairing normalization and antisymmetry on evens") {
    auto lc = LiftedChart::make(Chart::make({{"x", Parity::Even}}), FiberShift::None);
    SuperPoly x = lc.base_var(0), p = lc.fiber_var(0);
    CHECK(canonical_bracket(lc, p, x) == SuperPoly::constant(lc.total(), 1));
    CHECK(canonical_bracket(lc, x, p) == SuperPoly::constant(lc.total(), -1));
    // (F,F) = 0 for even F of momentum degree <= 1
    for (const char* expr : {"x", "p_x", "x*p_x", "1 + x^2*p_x"}) {
        SuperPoly f = P(lc.total(), expr);
        CHECK(canonical_bracket(lc, f, f).is_zero());
    }
}

TEST_CASE("canonical bracket: graded Leibniz on sampled triples") {
    auto lc = LiftedChart::make(corpus::chart11(), FiberShift::None);
    auto probes = probe_basis(lc.total(), 2);
    for (std::size_t i = 0; i < probes.size(); i += 2)
        for (std::size_t j = 0; j < probes.size(); j += 3)
            for (std::size_t k = 1; k < probes.size(); k += 4) {
                const auto &f = probes[i], &g = probes[j], &h = probes[k];
                // (F, GH) = (F,G)H + (-1)^{(F~+1)G~} G (F,H) for the even bracket
                SuperPoly lhs = canonical_bracket(lc, f, g * h);
                SuperPoly rhs = canonical_bracket(lc, f, g) * h;
                SuperPoly second = g * canonical_bracket(lc, f, h);
                int s = koszul(f.parity(), g.parity());
                rhs = s < 0 ? rhs - second : rhs + second;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("sign-consistency A: the double bracket reproduces the direct formula") {
    for (const StructureTensor& t : {corpus::darboux11(), corpus::darboux22(),
                                     corpus::linear_schouten11(), corpus::broken22()}) {
        auto probes = probe_basis(t.chart(), 2);
        for (const auto& f : probes)
            for (const auto& g : probes) {
                CAPTURE(to_string(f), to_string(g));
                CHECK(bracket(t, f, g) == direct_odd_bracket(t, f, g));
            }
    }
}

TEST_CASE("sign-consistency B: (S,S)=0 iff the Jacobiator scan vanishes") {
    // check_jacobi computes both routes and throws if they ever disagree
    CHECK(check_jacobi(corpus::darboux11()).holds);
    CHECK(check_jacobi(corpus::darboux22()).holds);
    CHECK(check_jacobi(corpus::linear_schouten11()).holds);
    CHECK(check_jacobi(corpus::even_poisson_r2()).holds);
    auto r = check_jacobi(corpus::broken22());
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.value.is_zero());
    // the witness triple re-evaluates to the recorded nonzero Jacobiator
    auto c = corpus::broken22().chart();
    CHECK(jacobiator(corpus::broken22(), SuperPoly::variable(c, r.a),
                     SuperPoly::variable(c, r.b), SuperPoly::variable(c, r.c)) == r.value);
}

TEST_CASE("Riemannian kinds are vacuously Jacobi") {
    CHECK(check_jacobi(corpus::riemannian_r1()).holds);
    CHECK(check_jacobi(corpus::riemannian_mixed12()).holds);
    CHECK_THROWS_AS(jacobiator(corpus::riemannian_r1(),
                               P(corpus::riemannian_r1().chart(), "x"),
                               P(corpus::riemannian_r1().chart(), "x"),
                               P(corpus::riemannian_r1().chart(), "x")),
                    Error);
}

TEST_CASE("bracket examples per kind") {
    auto s = corpus::darboux11();
    auto c = s.chart();
    CHECK(bracket(s, P(c, "theta"), P(c, "x")) == P(c, "1"));
    CHECK(bracket(s, P(c, "x"), P(c, "theta")) == P(c, "-1"));
    CHECK(bracket(s, P(c, "1"), P(c, "x + x^2")).is_zero());
    CHECK(bracket(s, P(c, "1"), P(c, "x*theta + theta")).is_zero());

    auto g = corpus::riemannian_r1();
    auto e = g.chart();
    CHECK(bracket(g, P(e, "x^2"), P(e, "x^3")) == P(e, "6*x^3"));

    CHECK_THROWS_AS(bracket(s, P(c, "1 + theta"), P(c, "x")), Error);  // non-homogeneous
}

TEST_CASE("hamiltonian fields and gradients") {
    auto s = corpus::darboux11();
    auto c = s.chart();
    VectorField xf = hamiltonian_field(s, P(c, "x"));
    CHECK(xf.parity == Parity::Odd);
    CHECK(xf.comps[0].is_zero());
    CHECK((xf.comps[1] == P(c, "1") || xf.comps[1] == P(c, "-1")));
    // consistency with X_f = (-1)^{f~+1}{f, .} on coordinates; f = x is even
    for (std::size_t a = 0; a < c->size(); ++a) {
        SuperPoly expectation = bracket(s, P(c, "x"), SuperPoly::variable(c, a));
        CHECK(xf.comps[a] == -expectation);
    }

    CHECK(hamiltonian_field(s, P(c, "5")).is_zero());

    auto g = corpus::riemannian_r1();
    VectorField grad = hamiltonian_field(g, P(g.chart(), "x^2"));
    CHECK(grad.comps[0] == P(g.chart(), "2*x"));
    // gradient pairing: <f, h> = (grad f)(h) on probes
    for (const auto& h : probe_basis(g.chart(), 3))
        CHECK(bracket(g, P(g.chart(), "x^2"), h) == lie_derivative(grad, h));
}

TEST_CASE("Eq. 3's two faces agree on probes") {
    for (const StructureTensor& t :
         {corpus::darboux11(), corpus::darboux22(), corpus::linear_schouten11()}) {
        for (const auto& f : probe_basis(t.chart(), 2)) {
            VectorField xf = hamiltonian_field(t, f);
            int s = koszul(f.parity() + Parity::Odd, Parity::Odd);  // (-1)^{f~+1}
            for (std::size_t a = 0; a < t.chart()->size(); ++a) {
                SuperPoly b = bracket(t, f, SuperPoly::variable(t.chart(), a));
                CHECK(xf.comps[a] == (s < 0 ? -b : b));
            }
        }
    }
}

TEST_CASE("field laws: X_{fg} and X_{{f,g}}") {
    for (const StructureTensor& t :
         {corpus::darboux11(), corpus::darboux22(), corpus::linear_schouten11()}) {
        auto probes = probe_basis(t.chart(), 2);
        for (const auto& f : probes)
            for (const auto& g : probes) {
                VectorField lhs4 = hamiltonian_field(t, bracket(t, f, g));
                VectorField rhs4 = commutator(hamiltonian_field(t, f), hamiltonian_field(t, g));
                CHECK(lhs4 == rhs4);

                if ((f * g).is_zero()) continue;
                // X_{fg} = (-1)^{f~} f X_g + (-1)^{g~ + f~g~} g X_f
                VectorField lhs5 = hamiltonian_field(t, f * g);
                int sf = is_odd(f.parity()) ? -1 : 1;
                int sg = (is_odd(g.parity()) ? -1 : 1) * koszul(f.parity(), g.parity());
                VectorField a = scale(f, hamiltonian_field(t, g));
                VectorField b = scale(g, hamiltonian_field(t, f));
                VectorField rhs5 = (sf < 0 ? -a : a) + (sg < 0 ? -b : b);
                CHECK(lhs5 == rhs5);
            }
    }
}

TEST_CASE("Poisson-module laws (Lie derivative against the bracket)") {
    for (const StructureTensor& t : {corpus::darboux11(), corpus::linear_schouten11()}) {
        auto probes = probe_basis(t.chart(), 2);
        for (const auto& f : probes)
            for (const auto& g : probes) {
                VectorField xf = hamiltonian_field(t, f);
                // [L_{X_f}, g] h = ((-1)^{f~+1}{f,g}) h
                SuperPoly xfg = bracket(t, f, g);
                xfg = is_odd(f.parity() + Parity::Odd) ? SuperPoly(-xfg) : xfg;
                for (const auto& h : probes) {
                    SuperPoly lhs = lie_derivative(xf, g * h);
                    SuperPoly second = g * lie_derivative(xf, h);
                    int s = koszul(xf.parity, g.parity());
                    lhs = s < 0 ? lhs + second : lhs - second;
                    CHECK(lhs == xfg * h);
                }
                // [L_{X_f}, L_{X_g}] = L_{X_{{f,g}}}
                VectorField xg = hamiltonian_field(t, g);
                VectorField lhs7 = commutator(xf, xg);
                VectorField rhs7 = hamiltonian_field(t, bracket(t, f, g));
                CHECK(lhs7 == rhs7);
            }
    }
}

TEST_CASE("bracket symmetry per kind") {
    // Poisson brackets are graded-antisymmetric, the scalar products of
    // gradients graded-symmetric, with the grading shifted by the kind parity.
    auto check_symmetry = [](const StructureTensor& t) {
        auto probes = probe_basis(t.chart(), 2);
        Parity eps = t.parity();
        int flip = is_poisson(t.kind()) ? -1 : 1;
        for (const auto& f : probes)
            for (const auto& g : probes) {
                int s = flip * koszul(f.parity() + eps, g.parity() + eps);
                SuperPoly rhs = bracket(t, g, f);
                CHECK(bracket(t, f, g) == (s < 0 ? -rhs : rhs));
            }
    };
    check_symmetry(corpus::darboux11());
    check_symmetry(corpus::linear_schouten11());
    check_symmetry(corpus::even_poisson_r2());
    check_symmetry(corpus::riemannian_r1());
    check_symmetry(corpus::riemannian_mixed12());
    check_symmetry(corpus::odd_riemannian11());
}

TEST_CASE("even Riemannian direct formula is minus the lifted double bracket") {
    // The lift route exists for all kinds.  For metrics the direct formula
    // (the one whose divergence gives a positive Laplacian on x^2) equals
    // -(f,(H,h)) uniformly under the pinned canonical conventions.
    auto g = corpus::riemannian_mixed12();
    auto probes = probe_basis(g.chart(), 2);
    LiftedTensor lt = lift_tensor(g);
    for (const auto& f : probes)
        for (const auto& h : probes) {
            SuperPoly via_lift = lt.chart.restrict_to_base(canonical_bracket(
                lt.chart, lt.chart.include(f),
                canonical_bracket(lt.chart, lt.hamiltonian, lt.chart.include(h))));
            CHECK(bracket(g, f, h) == -via_lift);
        }
}

TEST_CASE("Schouten-Lichnerowicz differential") {
    auto t = corpus::darboux22();
    LiftedTensor lt = lift_tensor(t);
    SuperPoly one = SuperPoly::constant(lt.chart.total(), 1);
    CHECK(sl_differential(lt.chart, lt.hamiltonian, one).is_zero());
    // D^2 = 0 on fiberwise probes of momentum degree <= 2
    for (const auto& f : probe_basis(lt.chart.total(), 2)) {
        SuperPoly df = sl_differential(lt.chart, lt.hamiltonian, f);
        CHECK(sl_differential(lt.chart, lt.hamiltonian, df).is_zero());
    }
    // rejected when (S,S) != 0
    LiftedTensor bad = lift_tensor(corpus::broken22());
    CHECK_THROWS_AS(sl_differential(bad.chart, bad.hamiltonian, bad.hamiltonian), Error);
}

TEST_CASE("is_poisson_field: zero, Hamiltonian, and a violating witness") {
    auto t = corpus::darboux11();
    CHECK(is_poisson_field(t, VectorField::zero(t.chart(), Parity::Even)));
    for (const auto& f : probe_basis(t.chart(), 2)) {
        VectorField xf = hamiltonian_field(t, f);
        CHECK(is_poisson_field(t, xf));
        CHECK(direct_poisson_field_law(t, xf));
    }
    // Y = x d/dx violates the derivation law on the coordinate pair (theta, x)
    VectorField y = VectorField::make(
        t.chart(), Parity::Even,
        {P(t.chart(), "x"), SuperPoly::zero(t.chart())});
    CHECK_FALSE(is_poisson_field(t, y));
    CHECK_FALSE(direct_poisson_field_law(t, y));
}

TEST_CASE("lie_derivative basics") {
    auto c = corpus::chart11();
    VectorField ddx = VectorField::make(
        c, Parity::Even, {P(c, "1"), SuperPoly::zero(c)});
    CHECK(lie_derivative(ddx, P(c, "x^2")) == P(c, "2*x"));
}
