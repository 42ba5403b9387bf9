#pragma once

#include <vector>

#include "sgv/matrix.hpp"

namespace sgv {

// A coordinate change expresses the target chart's coordinates as functions
// over the source chart: images[i] is the image of target variable i.
struct CoordinateChange {
    ChartPtr source;
    ChartPtr target;
    std::vector<SuperPoly> images;

    static CoordinateChange make(ChartPtr source, ChartPtr target,
                                 std::vector<SuperPoly> images) {
        if (images.size() != target->size())
            throw Error("coordinate change: one image per target variable required");
        for (std::size_t i = 0; i < images.size(); ++i) {
            require_same_chart(images[i].chart(), source, "coordinate change image");
            if (!images[i].has_parity(target->parity(i)))
                throw Error("coordinate change: image of '" + target->var(i).name +
                            "' has wrong parity");
        }
        return {std::move(source), std::move(target), std::move(images)};
    }
};

// f over the change's target chart, composed with the change and re-normal-
// ordered over the source chart.  A ring homomorphism.
inline SuperPoly substitute(const SuperPoly& f, const CoordinateChange& ch) {
    require_same_chart(f.chart(), ch.target, "substitute");
    if (f.has_denominator())
        throw Error("substitute: localized values cannot be substituted");
    SuperPoly acc = SuperPoly::zero(ch.source);
    for (const auto& [m, c] : f.terms()) {
        SuperPoly t = SuperPoly::constant(ch.source, c);
        for (std::size_t i = 0; i < ch.target->size(); ++i)
            for (std::uint32_t k = 0; k < m[i]; ++k) t = t * ch.images[i];
        acc += t;
    }
    return acc;
}

// Jacobian dx'/dx: rows run over target variables, columns over source
// variables, entries are left partials of the images over the source chart.
inline SuperMatrix jacobian(const CoordinateChange& ch) {
    SuperMatrix j;
    j.chart = ch.source;
    for (std::size_t i = 0; i < ch.target->size(); ++i)
        j.row_parity.push_back(ch.target->parity(i));
    for (std::size_t a = 0; a < ch.source->size(); ++a)
        j.col_parity.push_back(ch.source->parity(a));
    j.entry.assign(j.rows(), {});
    for (std::size_t i = 0; i < ch.target->size(); ++i) {
        j.entry[i].reserve(ch.source->size());
        for (std::size_t a = 0; a < ch.source->size(); ++a)
            j.entry[i].push_back(ch.images[i].left_partial(a));
    }
    return j;
}

// Composite of x -> x' -> x'': images of the outer change pushed through the
// inner one.  inner: source -> mid, outer: mid -> target.
inline CoordinateChange compose(const CoordinateChange& inner, const CoordinateChange& outer) {
    require_same_chart(inner.target, outer.source, "compose changes");
    std::vector<SuperPoly> images;
    images.reserve(outer.images.size());
    for (const auto& im : outer.images) images.push_back(substitute(im, inner));
    return CoordinateChange::make(inner.source, outer.target, std::move(images));
}

inline SuperPoly berezinian(const CoordinateChange& ch) { return berezinian(jacobian(ch)); }

}  // namespace sgv
