#include "tropcount/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tropcount {

namespace {

std::string point_str(LatticePoint p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

}  // namespace

std::vector<LatticePoint> DegreeTriangle::lattice_points() const {
    std::vector<LatticePoint> points;
    points.reserve(static_cast<std::size_t>(lattice_point_count()));
    for (int i = 0; i <= d; ++i)
        for (int j = d - i; j >= 0; --j) points.push_back({i, j});
    return points;
}

void validate_path(const LatticePath& path, int degree) {
    DegreeTriangle triangle(degree);
    if (path.size() < 2) throw ValidationError("lattice path needs at least two points");
    if (!(path.front() == LatticePoint{0, degree}))
        throw ValidationError("lattice path must start at (0," + std::to_string(degree) + ")");
    if (!(path.back() == LatticePoint{degree, 0}))
        throw ValidationError("lattice path must end at (" + std::to_string(degree) + ",0)");
    for (const LatticePoint& p : path)
        if (!triangle.contains(p))
            throw ValidationError("lattice path leaves the triangle at " + point_str(p));
    for (std::size_t k = 1; k < path.size(); ++k)
        if (!lambda_less(path[k - 1], path[k]))
            throw ValidationError("lattice path is not increasing at " + point_str(path[k]));
}

int path_degree(const LatticePath& path) {
    if (path.empty()) throw ValidationError("empty lattice path");
    int degree = path.front().j;
    validate_path(path, degree);
    return degree;
}

std::pair<LatticePath, LatticePath> boundary_paths(int degree) {
    DegreeTriangle triangle(degree);
    LatticePath plus, minus;
    plus.reserve(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) plus.push_back({k, degree - k});
    minus.reserve(2 * static_cast<std::size_t>(degree) + 1);
    for (int j = degree; j >= 0; --j) minus.push_back({0, j});
    for (int i = 1; i <= degree; ++i) minus.push_back({i, 0});
    return {plus, minus};
}

Turn turn_at(const LatticePath& path, std::size_t k) {
    if (k < 1 || k + 1 >= path.size())
        throw ValidationError("turn index " + std::to_string(k) + " out of range");
    long long det = cross(path[k] - path[k - 1], path[k + 1] - path[k]);
    if (det > 0) return Turn::Left;
    if (det < 0) return Turn::Right;
    return Turn::Straight;
}

LatticeTriangle LatticeTriangle::canonical() const {
    std::array<LatticePoint, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
}

long long normalized_area(const LatticeTriangle& t) {
    long long det = cross(t.b - t.a, t.c - t.a);
    return det < 0 ? -det : det;
}

long long edge_lattice_length(LatticePoint p, LatticePoint q) {
    if (p == q) throw ValidationError("edge lattice length needs distinct endpoints");
    return std::gcd(std::abs(p.i - q.i), std::abs(p.j - q.j));
}

long long interior_points(const LatticeTriangle& t) {
    if (normalized_area(t) == 0)
        throw ValidationError("interior point count of a degenerate triangle");
    int lo_i = std::min({t.a.i, t.b.i, t.c.i}), hi_i = std::max({t.a.i, t.b.i, t.c.i});
    int lo_j = std::min({t.a.j, t.b.j, t.c.j}), hi_j = std::max({t.a.j, t.b.j, t.c.j});
    long long count = 0;
    for (int i = lo_i; i <= hi_i; ++i) {
        for (int j = lo_j; j <= hi_j; ++j) {
            LatticePoint p{i, j};
            long long s1 = cross(t.b - t.a, p - t.a);
            long long s2 = cross(t.c - t.b, p - t.b);
            long long s3 = cross(t.a - t.c, p - t.c);
            if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)) ++count;
        }
    }
    return count;
}

LatticeParallelogram LatticeParallelogram::canonical() const {
    std::array<LatticePoint, 4> v{a, b, c, d};
    std::sort(v.begin(), v.end());
    LatticePoint base = v[0];
    // The vertex opposite to the lex-least one is determined by the
    // parallelogram identity: opposite = (sum of all four)/2 - base.
    LatticePoint sum = v[0] + v[1] + v[2] + v[3];
    if (sum.i % 2 != 0 || sum.j % 2 != 0)
        throw ValidationError("quadrilateral is not a parallelogram");
    LatticePoint opposite{sum.i / 2 - base.i, sum.j / 2 - base.j};
    std::vector<LatticePoint> neighbors;
    for (const LatticePoint& p : v)
        if (!(p == base) && !(p == opposite)) neighbors.push_back(p);
    if (neighbors.size() != 2 || !(neighbors[0] + neighbors[1] == base + opposite))
        throw ValidationError("quadrilateral is not a parallelogram");
    LatticePoint n1 = neighbors[0], n2 = neighbors[1];
    if (cross(n1 - base, n2 - base) < 0) std::swap(n1, n2);
    return {base, n1, opposite, n2};
}

long long normalized_area(const LatticeParallelogram& p) {
    long long det = cross(p.b - p.a, p.d - p.a);
    return 2 * (det < 0 ? -det : det);
}

void DualSubdivision::canonicalize() {
    for (LatticeTriangle& t : triangles) t = t.canonical();
    for (LatticeParallelogram& p : parallelograms) p = p.canonical();
    std::sort(triangles.begin(), triangles.end());
    std::sort(parallelograms.begin(), parallelograms.end());
}

void DualSubdivision::validate(int degree) const {
    DegreeTriangle triangle(degree);
    long long area_sum = 0;
    for (const LatticeTriangle& t : triangles) {
        long long area = normalized_area(t);
        if (area == 0) throw ValidationError("subdivision contains a degenerate triangle");
        for (const LatticePoint& p : {t.a, t.b, t.c})
            if (!triangle.contains(p))
                throw ValidationError("subdivision cell leaves the triangle at " + point_str(p));
        area_sum += area;
    }
    for (const LatticeParallelogram& p : parallelograms) {
        LatticeParallelogram canon = p.canonical();  // throws if not a parallelogram
        long long area = normalized_area(canon);
        if (area == 0) throw ValidationError("subdivision contains a degenerate parallelogram");
        for (const LatticePoint& q : {p.a, p.b, p.c, p.d})
            if (!triangle.contains(q))
                throw ValidationError("subdivision cell leaves the triangle at " + point_str(q));
        area_sum += area;
    }
    long long expected = static_cast<long long>(degree) * degree;
    if (area_sum != expected)
        throw ValidationError("subdivision areas sum to " + std::to_string(area_sum) +
                              ", expected " + std::to_string(expected));
}

}  // namespace tropcount
