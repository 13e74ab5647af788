#pragma once

#include <map>
#include <vector>

#include "tropcount/geometry.hpp"
#include "tropcount/rational.hpp"

namespace tropcount {

// Tropicalization engine, max-convention throughout: coefficients are minus
// the valuations of the Puiseux coefficients, the polynomial evaluates to
// max(c_ij + i*x + j*y), and the curve is the locus where that maximum is
// attained at least twice.

struct RatPoint {
    Rational x;
    Rational y;

    bool operator==(const RatPoint&) const = default;
};

struct TropicalPolynomial {
    std::map<LatticePoint, Rational> terms;  // exponent -> coefficient

    void set(int i, int j, const Rational& coefficient) { terms[{i, j}] = coefficient; }
};

// Helper for inputs given as valuations: coefficients are negated.
TropicalPolynomial from_valuations(const std::vector<std::pair<LatticePoint, Rational>>& vals);

// One 2-cell of the regular subdivision of the Newton polygon: the polygon
// (hull vertices, counterclockwise), every tight support point, and the
// point where this cell's monomials tie (the dual curve vertex).
struct SubdivisionCell {
    std::vector<LatticePoint> polygon;
    std::vector<LatticePoint> tight;
    RatPoint dual_vertex;
};

struct CellComplex {
    std::vector<SubdivisionCell> cells;
};

// Projection of the upper faces of the lifted support; cells may be
// arbitrary polygons. Throws on degenerate support (fewer than 3 affinely
// independent exponents).
CellComplex regular_subdivision(const TropicalPolynomial& p);

struct TropicalCurve {
    struct BoundedEdge {
        int u = 0;
        int v = 0;
        long long weight = 1;
    };
    struct End {
        int vertex = 0;
        LatticePoint direction;  // primitive, outward
        long long weight = 1;
    };

    std::vector<RatPoint> vertices;
    std::vector<BoundedEdge> bounded_edges;
    std::vector<End> ends;
};

// The corner locus: one vertex per subdivision cell, one bounded edge per
// interior subdivision edge, one end per boundary subdivision edge, weights
// equal to the dual edge lattice lengths.
TropicalCurve corner_locus(const TropicalPolynomial& p);

// Weighted sum of outward primitive directions at each vertex; residuals
// are exact integers and must vanish for a balanced curve.
struct BalanceReport {
    struct Entry {
        int vertex = 0;
        long long residual_x = 0;
        long long residual_y = 0;
    };
    std::vector<Entry> residuals;  // one per vertex
    bool balanced = true;
};

BalanceReport check_balancing(const TropicalCurve& curve);

}  // namespace tropcount
