#pragma once

#include <string>

#include "tropcount/geometry.hpp"
#include "tropcount/rational.hpp"
#include "tropcount/trop_poly.hpp"

namespace tropcount {

// Deterministic SVG emission for lattice paths, dual subdivisions and
// tropical curves. All coordinates are exact affine images of the rational
// inputs; identical inputs produce byte-identical documents.

struct RenderConfig {
    Rational scale{40};       // lattice units to drawing units
    Rational margin{20};
    Rational end_length{3, 2};  // ends are drawn as end_length * primitive direction
    bool label_weights = true;

    void validate() const {
        if (!(scale > Rational(0))) throw ValidationError("render scale must be positive");
        if (margin < Rational(0)) throw ValidationError("render margin must be nonnegative");
        if (!(end_length > Rational(0)))
            throw ValidationError("render end length must be positive");
    }
};

// Degree triangle, its lattice points, and the path steps as line segments.
std::string render_path(const LatticePath& path, const RenderConfig& cfg = {});

// Cell boundaries of a dual subdivision, weight labels optional.
std::string render_subdivision(const DualSubdivision& cells, int degree,
                               const RenderConfig& cfg = {});

// Cell boundaries of a regular subdivision complex.
std::string render_cells(const CellComplex& complex, const RenderConfig& cfg = {});

// Bounded edges as segments, ends as truncated arrows, weights > 1 labeled.
// Rejects unbalanced curves.
std::string render_curve(const TropicalCurve& curve, const RenderConfig& cfg = {});

}  // namespace tropcount
