#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgv/format.hpp"
#include "sgv/lifted.hpp"

namespace sgv {

// ---------------------------------------------------------------------------
// The four geometries controlled by a rank-2 tensor T^{ab}.
// ---------------------------------------------------------------------------

enum class GeometryKind : unsigned char {
    OddPoisson,      // S^{ab} = (-1)^{a~b~} S^{ba},          parity a~+b~+1
    EvenPoisson,     // P^{ab} = (-1)^{(a~+1)(b~+1)} P^{ba},  parity a~+b~
    EvenRiemannian,  // g^{ab} = (-1)^{a~b~} g^{ba},          parity a~+b~
    OddRiemannian,   // chi^{ab} = (-1)^{(a~+1)(b~+1)} chi^{ba}, parity a~+b~+1
};

inline const char* name(GeometryKind k) {
    switch (k) {
        case GeometryKind::OddPoisson: return "odd_poisson";
        case GeometryKind::EvenPoisson: return "even_poisson";
        case GeometryKind::EvenRiemannian: return "even_riemannian";
        case GeometryKind::OddRiemannian: return "odd_riemannian";
    }
    return "?";
}

inline std::optional<GeometryKind> geometry_kind_of(std::string_view s) {
    if (s == "odd_poisson") return GeometryKind::OddPoisson;
    if (s == "even_poisson") return GeometryKind::EvenPoisson;
    if (s == "even_riemannian") return GeometryKind::EvenRiemannian;
    if (s == "odd_riemannian") return GeometryKind::OddRiemannian;
    return std::nullopt;
}

inline bool is_poisson(GeometryKind k) {
    return k == GeometryKind::OddPoisson || k == GeometryKind::EvenPoisson;
}

// Parity of the structure (and of its bracket).
inline Parity structure_parity(GeometryKind k) {
    return (k == GeometryKind::OddPoisson || k == GeometryKind::OddRiemannian)
               ? Parity::Odd
               : Parity::Even;
}

// Bracket that the lifted quadratic Hamiltonian lives in.
inline FiberShift lift_shift(GeometryKind k) {
    return (k == GeometryKind::OddPoisson || k == GeometryKind::EvenRiemannian)
               ? FiberShift::None
               : FiberShift::ParityReversed;
}

// Sign s with T^{ab} = s * T^{ba} for the kind.
inline int symmetry_sign(GeometryKind k, Parity pa, Parity pb) {
    if (k == GeometryKind::OddPoisson || k == GeometryKind::EvenRiemannian)
        return koszul(pa, pb);
    return koszul(pa + Parity::Odd, pb + Parity::Odd);
}

inline Parity entry_parity(GeometryKind k, Parity pa, Parity pb) {
    return pa + pb + structure_parity(k);
}

class StructureTensor {
public:
    static StructureTensor make(ChartPtr chart, GeometryKind kind,
                                std::vector<std::vector<SuperPoly>> entries) {
        std::size_t n = chart->size();
        if (entries.size() != n) throw Error("tensor: wrong number of rows");
        for (auto& row : entries)
            if (row.size() != n) throw Error("tensor: wrong number of columns");
        StructureTensor t;
        t.chart_ = std::move(chart);
        t.kind_ = kind;
        t.entries_ = std::move(entries);
        t.validate();
        return t;
    }

    static StructureTensor zero(ChartPtr chart, GeometryKind kind) {
        std::size_t n = chart->size();
        std::vector<std::vector<SuperPoly>> e(
            n, std::vector<SuperPoly>(n, SuperPoly::zero(chart)));
        return make(std::move(chart), kind, std::move(e));
    }

    // Sparse construction with symmetry auto-completion: entries given for
    // (a,b) pairs; missing symmetric partners are filled in by the kind's
    // rule, explicitly given conflicting partners are an error.
    static StructureTensor from_sparse(
        ChartPtr chart, GeometryKind kind,
        const std::vector<std::pair<std::pair<std::size_t, std::size_t>, SuperPoly>>& given) {
        std::size_t n = chart->size();
        std::vector<std::vector<SuperPoly>> e(
            n, std::vector<SuperPoly>(n, SuperPoly::zero(chart)));
        std::vector<std::vector<bool>> set(n, std::vector<bool>(n, false));
        for (const auto& [ab, v] : given) {
            auto [a, b] = ab;
            if (a >= n || b >= n) throw Error("tensor entry index out of range");
            if (set[a][b]) throw Error("tensor entry given twice");
            e[a][b] = v;
            set[a][b] = true;
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (!set[a][b] || set[b][a]) continue;
                int s = symmetry_sign(kind, chart->parity(a), chart->parity(b));
                e[b][a] = s < 0 ? -e[a][b] : e[a][b];
                set[b][a] = true;
            }
        return make(std::move(chart), kind, std::move(e));
    }

    const ChartPtr& chart() const { return chart_; }
    GeometryKind kind() const { return kind_; }
    const SuperPoly& entry(std::size_t a, std::size_t b) const { return entries_[a][b]; }
    Parity parity() const { return structure_parity(kind_); }

    bool operator==(const StructureTensor& o) const {
        return kind_ == o.kind_ && entries_ == o.entries_;
    }

private:
    void validate() const {
        std::size_t n = chart_->size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                require_same_chart(entries_[a][b].chart(), chart_, "tensor entry");
                Parity want = entry_parity(kind_, chart_->parity(a), chart_->parity(b));
                if (!entries_[a][b].has_parity(want))
                    throw Error(std::string("tensor entry (") + chart_->var(a).name + "," +
                                chart_->var(b).name + ") parity mismatch for kind " +
                                name(kind_));
                int s = symmetry_sign(kind_, chart_->parity(a), chart_->parity(b));
                SuperPoly want_ba = s < 0 ? -entries_[a][b] : entries_[a][b];
                if (!(entries_[b][a] == want_ba))
                    throw Error(std::string("tensor entries (") + chart_->var(a).name + "," +
                                chart_->var(b).name + ") violate the symmetry rule of kind " +
                                name(kind_));
            }
    }

    ChartPtr chart_;
    GeometryKind kind_ = GeometryKind::OddPoisson;
    std::vector<std::vector<SuperPoly>> entries_;
};

// ---------------------------------------------------------------------------
// Vector fields
// ---------------------------------------------------------------------------

struct VectorField {
    ChartPtr chart;
    Parity parity = Parity::Even;
    std::vector<SuperPoly> comps;  // X = sum comps[a] * d/dx^a, acting from the left

    static VectorField make(ChartPtr chart, Parity parity, std::vector<SuperPoly> comps) {
        if (comps.size() != chart->size())
            throw Error("vector field: one component per chart variable");
        for (std::size_t a = 0; a < comps.size(); ++a) {
            require_same_chart(comps[a].chart(), chart, "vector field component");
            if (!comps[a].has_parity(parity + chart->parity(a)))
                throw Error("vector field component '" + chart->var(a).name +
                            "' has wrong parity");
        }
        return {std::move(chart), parity, std::move(comps)};
    }

    static VectorField zero(ChartPtr chart, Parity parity = Parity::Even) {
        std::vector<SuperPoly> c(chart->size(), SuperPoly::zero(chart));
        return {std::move(chart), parity, std::move(c)};
    }

    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const VectorField& x, const VectorField& y) {
        return x.comps == y.comps;  // parities of nonzero fields agree by invariant
    }
};

inline SuperPoly lie_derivative(const VectorField& x, const SuperPoly& f) {
    require_same_chart(x.chart, f.chart(), "lie_derivative");
    SuperPoly acc = SuperPoly::zero(x.chart);
    for (std::size_t a = 0; a < x.comps.size(); ++a)
        acc += x.comps[a] * f.left_partial(a);
    return acc;
}

inline VectorField operator+(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart, y.chart, "field add");
    Parity p = x.is_zero() ? y.parity : x.parity;
    if (!x.is_zero() && !y.is_zero() && x.parity != y.parity)
        throw Error("field add: parity mismatch");
    std::vector<SuperPoly> c;
    for (std::size_t a = 0; a < x.comps.size(); ++a) c.push_back(x.comps[a] + y.comps[a]);
    return VectorField::make(x.chart, p, std::move(c));
}

inline VectorField operator-(const VectorField& x) {
    std::vector<SuperPoly> c;
    for (const auto& v : x.comps) c.push_back(-v);
    return VectorField::make(x.chart, x.parity, std::move(c));
}

inline VectorField operator-(const VectorField& x, const VectorField& y) { return x + (-y); }

// f * X, the field scaled by a homogeneous function on the left.
inline VectorField scale(const SuperPoly& f, const VectorField& x) {
    if (!f.is_homogeneous()) throw Error("scale: non-homogeneous function");
    std::vector<SuperPoly> c;
    for (const auto& v : x.comps) c.push_back(f * v);
    return VectorField::make(x.chart, f.parity() + x.parity, std::move(c));
}

// Graded commutator [X,Y] = X Y - (-1)^{X~Y~} Y X.
inline VectorField commutator(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart, y.chart, "field commutator");
    int s = koszul(x.parity, y.parity);
    std::vector<SuperPoly> c;
    for (std::size_t a = 0; a < x.comps.size(); ++a) {
        SuperPoly t = lie_derivative(x, y.comps[a]);
        SuperPoly u = lie_derivative(y, x.comps[a]);
        c.push_back(s < 0 ? t + u : t - u);
    }
    return VectorField::make(x.chart, x.parity + y.parity, std::move(c));
}

// ---------------------------------------------------------------------------
// Brackets, Hamiltonian fields / gradients, Jacobi
// ---------------------------------------------------------------------------

struct LiftedTensor {
    LiftedChart chart;
    SuperPoly hamiltonian;
};

// (1/2) T^{ab}(x) p_b p_a over the kind's lift.
inline LiftedTensor lift_tensor(const StructureTensor& t) {
    LiftedChart lc = LiftedChart::make(t.chart(), lift_shift(t.kind()));
    SuperPoly s = SuperPoly::zero(lc.total());
    std::size_t n = t.chart()->size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const SuperPoly& e = t.entry(a, b);
            if (e.is_zero()) continue;
            s += lc.include(e) * lc.fiber_var(b) * lc.fiber_var(a);
        }
    return {std::move(lc), Rational(1, 2) * s};
}

namespace detail {

inline void require_homogeneous(const SuperPoly& f, const char* op) {
    if (!f.is_homogeneous())
        throw Error(std::string(op) + ": non-homogeneous input rejected");
}

}  // namespace detail

// The kind's bracket / scalar product:
//   odd Poisson      {f,g}   = -(-1)^{f~(a~+1)} S^{ab} d_b f d_a g
//   even Riemannian  <f,g>   =  (-1)^{f~ a~}    g^{ab} d_b f d_a g
//   even Poisson     {f,g}   = [[f, [[P, g]]]]
//   odd Riemannian   <f,g>   = [[f, [[chi, g]]]]
inline SuperPoly bracket(const StructureTensor& t, const SuperPoly& f, const SuperPoly& g) {
    require_same_chart(f.chart(), t.chart(), "bracket");
    require_same_chart(g.chart(), t.chart(), "bracket");
    detail::require_homogeneous(f, "bracket");
    detail::require_homogeneous(g, "bracket");
    std::size_t n = t.chart()->size();
    switch (t.kind()) {
        case GeometryKind::OddPoisson: {
            SuperPoly acc = SuperPoly::zero(t.chart());
            Parity pf = f.parity();
            for (std::size_t a = 0; a < n; ++a) {
                int sign = -koszul(pf, t.chart()->parity(a) + Parity::Odd);
                for (std::size_t b = 0; b < n; ++b) {
                    if (t.entry(a, b).is_zero()) continue;
                    SuperPoly term = t.entry(a, b) * f.left_partial(b) * g.left_partial(a);
                    acc = sign < 0 ? acc - term : acc + term;
                }
            }
            return acc;
        }
        case GeometryKind::EvenRiemannian: {
            SuperPoly acc = SuperPoly::zero(t.chart());
            Parity pf = f.parity();
            for (std::size_t a = 0; a < n; ++a) {
                int sign = koszul(pf, t.chart()->parity(a));
                for (std::size_t b = 0; b < n; ++b) {
                    if (t.entry(a, b).is_zero()) continue;
                    SuperPoly term = t.entry(a, b) * f.left_partial(b) * g.left_partial(a);
                    acc = sign < 0 ? acc - term : acc + term;
                }
            }
            return acc;
        }
        case GeometryKind::EvenPoisson:
        case GeometryKind::OddRiemannian: {
            LiftedTensor lt = lift_tensor(t);
            SuperPoly inner = canonical_bracket(lt.chart, lt.hamiltonian, lt.chart.include(g));
            SuperPoly outer = canonical_bracket(lt.chart, lt.chart.include(f), inner);
            return lt.chart.restrict_to_base(outer);
        }
    }
    throw Error("bracket: unknown kind");
}

// Hamiltonian vector field / gradient.  For the odd Poisson kind this is the
// closed form X_f^a = (-1)^{a~ f~} S^{ab} d_b f; the other kinds read the
// components off the bracket against coordinates.
inline VectorField hamiltonian_field(const StructureTensor& t, const SuperPoly& f) {
    require_same_chart(f.chart(), t.chart(), "hamiltonian_field");
    detail::require_homogeneous(f, "hamiltonian_field");
    std::size_t n = t.chart()->size();
    Parity field_parity = f.parity() + t.parity();
    std::vector<SuperPoly> comps;
    comps.reserve(n);
    if (t.kind() == GeometryKind::OddPoisson) {
        for (std::size_t a = 0; a < n; ++a) {
            SuperPoly acc = SuperPoly::zero(t.chart());
            int sign = koszul(t.chart()->parity(a), f.parity());
            for (std::size_t b = 0; b < n; ++b) {
                if (t.entry(a, b).is_zero()) continue;
                SuperPoly term = t.entry(a, b) * f.left_partial(b);
                acc = sign < 0 ? acc - term : acc + term;
            }
            comps.push_back(acc);
        }
    } else {
        // even Poisson: X_f = {f, .};  Riemannian kinds: grad f = <f, .>
        for (std::size_t a = 0; a < n; ++a)
            comps.push_back(bracket(t, f, SuperPoly::variable(t.chart(), a)));
    }
    return VectorField::make(t.chart(), field_parity, std::move(comps));
}

// {f,{g,h}} - {{f,g},h} - (-1)^{(f~+e)(g~+e)} {g,{f,h}},  e the kind parity.
inline SuperPoly jacobiator(const StructureTensor& t, const SuperPoly& f, const SuperPoly& g,
                            const SuperPoly& h) {
    if (!is_poisson(t.kind()))
        throw Error("jacobiator: Riemannian kinds carry no Jacobi identity");
    detail::require_homogeneous(f, "jacobiator");
    detail::require_homogeneous(g, "jacobiator");
    detail::require_homogeneous(h, "jacobiator");
    Parity eps = t.parity();
    int s = koszul(f.parity() + eps, g.parity() + eps);
    SuperPoly r = bracket(t, f, bracket(t, g, h)) - bracket(t, bracket(t, f, g), h);
    SuperPoly last = bracket(t, g, bracket(t, f, h));
    return s < 0 ? r + last : r - last;
}

struct JacobiResult {
    bool holds = true;
    // witness triple of coordinate indices and the nonzero Jacobiator
    std::size_t a = 0, b = 0, c = 0;
    SuperPoly value;
};

// Coordinate-triple Jacobiator scan and the lifted self-bracket test,
// computed independently and required to agree.  Riemannian kinds are
// vacuously true.
inline JacobiResult check_jacobi(const StructureTensor& t) {
    JacobiResult r;
    r.value = SuperPoly::zero(t.chart());
    if (!is_poisson(t.kind())) return r;

    bool scan_ok = true;
    std::size_t n = t.chart()->size();
    for (std::size_t a = 0; a < n && scan_ok; ++a)
        for (std::size_t b = 0; b < n && scan_ok; ++b)
            for (std::size_t c = 0; c < n && scan_ok; ++c) {
                SuperPoly j = jacobiator(t, SuperPoly::variable(t.chart(), a),
                                         SuperPoly::variable(t.chart(), b),
                                         SuperPoly::variable(t.chart(), c));
                if (!j.is_zero()) {
                    scan_ok = false;
                    r.a = a;
                    r.b = b;
                    r.c = c;
                    r.value = j;
                }
            }

    LiftedTensor lt = lift_tensor(t);
    bool lift_ok = canonical_bracket(lt.chart, lt.hamiltonian, lt.hamiltonian).is_zero();
    if (scan_ok != lift_ok)
        throw Error("check_jacobi: Jacobiator scan and lifted self-bracket disagree");
    r.holds = scan_ok;
    return r;
}

// Lift of a vector field to a fiberwise-linear function, Y^a p_a.
inline SuperPoly lift_field(const LiftedChart& lc, const VectorField& y) {
    require_same_chart(y.chart, lc.base(), "lift_field");
    SuperPoly acc = SuperPoly::zero(lc.total());
    for (std::size_t a = 0; a < y.comps.size(); ++a)
        acc += lc.include(y.comps[a]) * lc.fiber_var(a);
    return acc;
}

// Y is a Poisson field iff D(Y^a p_a) = (T, Y^a p_a) = 0.
inline bool is_poisson_field(const StructureTensor& t, const VectorField& y) {
    if (!is_poisson(t.kind())) throw Error("is_poisson_field: Poisson kinds only");
    if (!check_jacobi(t).holds) throw Error("is_poisson_field: tensor fails Jacobi");
    LiftedTensor lt = lift_tensor(t);
    return canonical_bracket(lt.chart, lt.hamiltonian, lift_field(lt.chart, y)).is_zero();
}

}  // namespace sgv
