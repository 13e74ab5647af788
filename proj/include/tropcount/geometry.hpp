#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "tropcount/errors.hpp"

namespace tropcount {

// Lattice geometry of the degree triangle: the combinatorial order on its
// lattice points, increasing lattice paths, the boundary paths, and the
// triangle/parallelogram cells of dual subdivisions.

struct LatticePoint {
    int i = 0;
    int j = 0;

    friend LatticePoint operator+(LatticePoint a, LatticePoint b) {
        return {a.i + b.i, a.j + b.j};
    }
    friend LatticePoint operator-(LatticePoint a, LatticePoint b) {
        return {a.i - b.i, a.j - b.j};
    }
    // Plain lexicographic order, used for canonical storage; the path order
    // is lambda_less below.
    auto operator<=>(const LatticePoint&) const = default;
};

inline long long cross(LatticePoint a, LatticePoint b) {
    return static_cast<long long>(a.i) * b.j - static_cast<long long>(a.j) * b.i;
}

// The path order: (i,j) < (i',j') iff i < i', or i = i' and j > j'.
inline bool lambda_less(LatticePoint p, LatticePoint q) {
    return p.i != q.i ? p.i < q.i : p.j > q.j;
}

struct LambdaLess {
    bool operator()(LatticePoint p, LatticePoint q) const { return lambda_less(p, q); }
};

// The triangle with vertices (0,0), (d,0), (0,d).
struct DegreeTriangle {
    int d = 1;

    explicit DegreeTriangle(int degree) : d(degree) {
        if (d < 1) throw ValidationError("degree must be at least 1");
    }

    bool contains(LatticePoint p) const { return p.i >= 0 && p.j >= 0 && p.i + p.j <= d; }
    long long lattice_point_count() const {
        return static_cast<long long>(d + 1) * (d + 2) / 2;
    }
    // All lattice points, sorted in the path order.
    std::vector<LatticePoint> lattice_points() const;
};

// A lattice path is its sequence of points; validity is checked explicitly.
using LatticePath = std::vector<LatticePoint>;

// Throws unless the path starts at (0,d), ends at (d,0), stays inside the
// triangle and is strictly increasing in the path order.
void validate_path(const LatticePath& path, int degree);

// Degree read off the endpoints; validates the whole path.
int path_degree(const LatticePath& path);

// delta_plus: unit steps along the hypotenuse (0,d) -> (d,0).
// delta_minus: unit steps (0,d) -> (0,0) -> (d,0).
std::pair<LatticePath, LatticePath> boundary_paths(int degree);

enum class Turn { Left, Right, Straight };

// Turn of the path at interior index k (1 <= k <= size-2), by the sign of
// det(step_in, step_out).
Turn turn_at(const LatticePath& path, std::size_t k);

struct LatticeTriangle {
    LatticePoint a, b, c;

    // Vertices sorted lexicographically; cells compare as canonical records.
    LatticeTriangle canonical() const;
    auto operator<=>(const LatticeTriangle&) const = default;
};

// |det(b-a, c-a)|, i.e. twice the Euclidean area.
long long normalized_area(const LatticeTriangle& t);

// gcd(|di|, |dj|); p and q must differ.
long long edge_lattice_length(LatticePoint p, LatticePoint q);

// Number of lattice points strictly inside the triangle, by enumeration.
long long interior_points(const LatticeTriangle& t);

// Parallelogram with vertices in cyclic order (so c == b + d - a).
struct LatticeParallelogram {
    LatticePoint a, b, c, d;

    // Lex-least vertex first, counterclockwise.
    LatticeParallelogram canonical() const;
    auto operator<=>(const LatticeParallelogram&) const = default;
};

// Twice the Euclidean area, matching the triangle normalization.
long long normalized_area(const LatticeParallelogram& p);

// A multiset of triangle and parallelogram cells tiling the degree triangle.
struct DualSubdivision {
    std::vector<LatticeTriangle> triangles;
    std::vector<LatticeParallelogram> parallelograms;

    // Sort cells into the canonical multiset order.
    void canonicalize();
    // Cells inside the triangle, parallelograms genuine, areas summing to d^2.
    void validate(int degree) const;

    auto operator<=>(const DualSubdivision&) const = default;
};

}  // namespace tropcount
