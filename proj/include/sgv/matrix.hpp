#pragma once

#include <vector>

#include "sgv/series.hpp"

namespace sgv {

// Square matrix of SuperPolys with parity-labelled rows and columns.  The
// parity labels induce the block structure (A = even/even, B = even/odd,
// C = odd/even, D = odd/odd) used by the Berezinian.
struct SuperMatrix {
    std::vector<Parity> row_parity;
    std::vector<Parity> col_parity;
    std::vector<std::vector<SuperPoly>> entry;  // entry[row][col]
    ChartPtr chart;

    std::size_t rows() const { return row_parity.size(); }
    std::size_t cols() const { return col_parity.size(); }

    static SuperMatrix zero(ChartPtr c, std::vector<Parity> rp, std::vector<Parity> cp) {
        SuperMatrix m;
        m.chart = std::move(c);
        m.row_parity = std::move(rp);
        m.col_parity = std::move(cp);
        m.entry.assign(m.rows(), std::vector<SuperPoly>(m.cols(), SuperPoly::zero(m.chart)));
        return m;
    }
};

inline SuperMatrix mat_mul(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.cols() != b.rows()) throw Error("mat_mul: shape mismatch");
    SuperMatrix r = SuperMatrix::zero(a.chart, a.row_parity, b.col_parity);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            SuperPoly s = SuperPoly::zero(a.chart);
            for (std::size_t k = 0; k < a.cols(); ++k) s += a.entry[i][k] * b.entry[k][j];
            r.entry[i][j] = s;
        }
    return r;
}

namespace detail {

// Determinant of a matrix with even (mutually commuting) entries, by cofactor
// expansion along the first row.  The 0x0 determinant is 1.
inline SuperPoly even_determinant(const ChartPtr& chart,
                                  const std::vector<std::vector<SuperPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return SuperPoly::constant(chart, 1);
    if (n == 1) return m[0][0];
    SuperPoly det = SuperPoly::zero(chart);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SuperPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<SuperPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        SuperPoly cof = m[0][j] * even_determinant(chart, minor);
        det = (j & 1) ? det - cof : det + cof;
    }
    return det;
}

// Inverse of a matrix with even entries via the adjugate.
inline std::vector<std::vector<SuperPoly>> even_inverse(
    const ChartPtr& chart, const std::vector<std::vector<SuperPoly>>& m) {
    std::size_t n = m.size();
    SuperPoly det = even_determinant(chart, m);
    SuperPoly det_inv = invert(det);
    std::vector<std::vector<SuperPoly>> inv(n, std::vector<SuperPoly>(n, SuperPoly::zero(chart)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<SuperPoly>> minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<SuperPoly> row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            SuperPoly cof = even_determinant(chart, minor) * det_inv;
            inv[i][j] = ((i + j) & 1) ? -cof : cof;
        }
    return inv;
}

}  // namespace detail

// Ber(J) = det(A - B D^{-1} C) * det(D)^{-1}.  Every inverse is taken in the
// localized ring, so a D-block whose body is not a declared unit is rejected.
inline SuperPoly berezinian(const SuperMatrix& j) {
    if (j.rows() != j.cols()) throw Error("berezinian: matrix not square");
    std::vector<std::size_t> re, ro, ce, co;
    for (std::size_t i = 0; i < j.rows(); ++i)
        (j.row_parity[i] == Parity::Even ? re : ro).push_back(i);
    for (std::size_t i = 0; i < j.cols(); ++i)
        (j.col_parity[i] == Parity::Even ? ce : co).push_back(i);
    if (re.size() != ce.size() || ro.size() != co.size())
        throw Error("berezinian: even/odd block sizes differ");

    auto block = [&](const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
        std::vector<std::vector<SuperPoly>> b(rs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t k = 0; k < cs.size(); ++k)
                b[i].push_back(j.entry[rs[i]][cs[k]]);
        return b;
    };

    auto A = block(re, ce), B = block(re, co), C = block(ro, ce), D = block(ro, co);

    SuperPoly det_d = detail::even_determinant(j.chart, D);
    SuperPoly det_d_inv;
    try {
        det_d_inv = invert(det_d);
    } catch (const Error& e) {
        throw Error(std::string("berezinian: odd/odd block not invertible: ") + e.what());
    }

    std::vector<std::vector<SuperPoly>> schur = A;
    if (!ro.empty() && !re.empty()) {
        auto Dinv = detail::even_inverse(j.chart, D);
        for (std::size_t i = 0; i < re.size(); ++i)
            for (std::size_t k = 0; k < ce.size(); ++k) {
                SuperPoly s = SuperPoly::zero(j.chart);
                for (std::size_t p = 0; p < ro.size(); ++p)
                    for (std::size_t q = 0; q < ro.size(); ++q)
                        s += B[i][p] * Dinv[p][q] * C[q][k];
                schur[i][k] = schur[i][k] - s;
            }
    }
    return detail::even_determinant(j.chart, schur) * det_d_inv;
}

}  // namespace sgv
