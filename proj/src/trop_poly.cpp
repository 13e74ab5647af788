#include "tropcount/trop_poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

namespace tropcount {

namespace {

Rational evaluate_term(LatticePoint exponent, const Rational& coefficient, const RatPoint& w) {
    return coefficient + Rational(exponent.i) * w.x + Rational(exponent.j) * w.y;
}

// Counterclockwise convex hull (Andrew monotone chain), collinear interior
// points dropped.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;
    std::vector<LatticePoint> hull(2 * points.size());
    std::size_t h = 0;
    for (std::size_t k = 0; k < points.size(); ++k) {  // lower
        while (h >= 2 && cross(hull[h - 1] - hull[h - 2], points[k] - hull[h - 2]) <= 0) --h;
        hull[h++] = points[k];
    }
    for (std::size_t k = points.size() - 1, lower = h + 1; k-- > 0;) {  // upper
        while (h >= lower && cross(hull[h - 1] - hull[h - 2], points[k] - hull[h - 2]) <= 0) --h;
        hull[h++] = points[k];
    }
    hull.resize(h - 1);
    return hull;
}

LatticePoint primitive_integer_vector(const Rational& dx, const Rational& dy) {
    __int128 x = static_cast<__int128>(dx.num()) * dy.den();
    __int128 y = static_cast<__int128>(dy.num()) * dx.den();
    if (x == 0 && y == 0) throw InternalError("zero direction vector");
    auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
    __int128 g = abs128(x), t = abs128(y);
    while (t != 0) {
        __int128 r = g % t;
        g = t;
        t = r;
    }
    x /= g;
    y /= g;
    constexpr __int128 lim = std::numeric_limits<int>::max();
    if (abs128(x) > lim || abs128(y) > lim)
        throw std::overflow_error("primitive direction exceeds integer range");
    return {static_cast<int>(x), static_cast<int>(y)};
}

}  // namespace

TropicalPolynomial from_valuations(
    const std::vector<std::pair<LatticePoint, Rational>>& vals) {
    TropicalPolynomial p;
    for (const auto& [exponent, valuation] : vals) p.terms[exponent] = -valuation;
    return p;
}

CellComplex regular_subdivision(const TropicalPolynomial& p) {
    std::vector<LatticePoint> support;
    std::vector<Rational> coeff;
    for (const auto& [exponent, c] : p.terms) {
        support.push_back(exponent);
        coeff.push_back(c);
    }
    const std::size_t n = support.size();
    bool independent = false;
    for (std::size_t a = 0; a < n && !independent; ++a)
        for (std::size_t b = a + 1; b < n && !independent; ++b)
            for (std::size_t c = b + 1; c < n && !independent; ++c)
                independent = cross(support[b] - support[a], support[c] - support[a]) != 0;
    if (!independent)
        throw ValidationError(
            "degenerate support: need at least 3 affinely independent exponents");

    // Each 2-cell is the tight set of the upper hull at the unique point
    // where three affinely independent of its monomials tie.
    std::map<std::vector<LatticePoint>, SubdivisionCell> found;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                LatticePoint ab = support[a] - support[b];
                LatticePoint ac = support[a] - support[c];
                long long det = cross(ab, ac);
                if (det == 0) continue;
                Rational r1 = coeff[b] - coeff[a];
                Rational r2 = coeff[c] - coeff[a];
                RatPoint w;
                w.x = (r1 * Rational(ac.j) - r2 * Rational(ab.j)) / Rational(det);
                w.y = (Rational(ab.i) * r2 - Rational(ac.i) * r1) / Rational(det);

                Rational best = evaluate_term(support[0], coeff[0], w);
                for (std::size_t k = 1; k < n; ++k)
                    best = std::max(best, evaluate_term(support[k], coeff[k], w));
                std::vector<LatticePoint> tight;
                for (std::size_t k = 0; k < n; ++k)
                    if (evaluate_term(support[k], coeff[k], w) == best)
                        tight.push_back(support[k]);
                auto in_tight = [&](std::size_t k) {
                    return std::find(tight.begin(), tight.end(), support[k]) != tight.end();
                };
                if (!in_tight(a) || !in_tight(b) || !in_tight(c)) continue;

                auto [it, inserted] = found.try_emplace(tight);
                if (!inserted) {
                    if (!(it->second.dual_vertex == w))
                        throw InternalError("tie point of a subdivision cell is ambiguous");
                    continue;
                }
                SubdivisionCell& cell = it->second;
                cell.tight = tight;
                cell.polygon = convex_hull(tight);
                cell.dual_vertex = w;
                if (cell.polygon.size() < 3)
                    throw InternalError("degenerate 2-cell in regular subdivision");
            }
        }
    }

    CellComplex complex;
    complex.cells.reserve(found.size());
    for (auto& [key, cell] : found) complex.cells.push_back(std::move(cell));
    return complex;
}

TropicalCurve corner_locus(const TropicalPolynomial& p) {
    CellComplex complex = regular_subdivision(p);

    // Placement check: the cell's monomials tie at its dual vertex, all
    // others stay strictly below.
    for (const SubdivisionCell& cell : complex.cells) {
        const Rational tied = evaluate_term(cell.tight.front(), p.terms.at(cell.tight.front()),
                                            cell.dual_vertex);
        for (const auto& [exponent, coefficient] : p.terms) {
            Rational value = evaluate_term(exponent, coefficient, cell.dual_vertex);
            bool member =
                std::find(cell.tight.begin(), cell.tight.end(), exponent) != cell.tight.end();
            if (member ? !(value == tied) : !(value < tied))
                throw InternalError("curve vertex placement inconsistent with its cell");
        }
    }

    TropicalCurve curve;
    curve.vertices.reserve(complex.cells.size());
    for (const SubdivisionCell& cell : complex.cells) curve.vertices.push_back(cell.dual_vertex);

    struct SegmentKey {
        LatticePoint lo, hi;
        auto operator<=>(const SegmentKey&) const = default;
    };
    std::map<SegmentKey, std::vector<int>> incident;
    for (std::size_t idx = 0; idx < complex.cells.size(); ++idx) {
        const std::vector<LatticePoint>& poly = complex.cells[idx].polygon;
        for (std::size_t k = 0; k < poly.size(); ++k) {
            LatticePoint p1 = poly[k], p2 = poly[(k + 1) % poly.size()];
            SegmentKey key = p1 < p2 ? SegmentKey{p1, p2} : SegmentKey{p2, p1};
            incident[key].push_back(static_cast<int>(idx));
        }
    }

    for (const auto& [segment, cells] : incident) {
        long long weight = edge_lattice_length(segment.lo, segment.hi);
        if (cells.size() == 2) {
            const RatPoint& u = curve.vertices[static_cast<std::size_t>(cells[0])];
            const RatPoint& v = curve.vertices[static_cast<std::size_t>(cells[1])];
            LatticePoint dual = segment.hi - segment.lo;
            Rational dot = (v.x - u.x) * Rational(dual.i) + (v.y - u.y) * Rational(dual.j);
            if (!dot.is_zero())
                throw InternalError("bounded edge is not orthogonal to its dual edge");
            if (u == v) throw InternalError("bounded edge with coinciding endpoints");
            curve.bounded_edges.push_back({cells[0], cells[1], weight});
        } else if (cells.size() == 1) {
            const SubdivisionCell& cell = complex.cells[static_cast<std::size_t>(cells[0])];
            LatticePoint e = segment.hi - segment.lo;
            LatticePoint normal{e.j, -e.i};
            // Point the normal away from the cell.
            LatticePoint witness = segment.lo;
            for (const LatticePoint& q : cell.polygon)
                if (cross(e, q - segment.lo) != 0) witness = q;
            if (witness == segment.lo)
                throw InternalError("boundary edge has no off-line cell vertex");
            long long side = static_cast<long long>(normal.i) * (witness.i - segment.lo.i) +
                             static_cast<long long>(normal.j) * (witness.j - segment.lo.j);
            if (side > 0) normal = LatticePoint{-normal.i, -normal.j};
            long long g = std::gcd(std::abs(normal.i), std::abs(normal.j));
            normal = {normal.i / static_cast<int>(g), normal.j / static_cast<int>(g)};
            curve.ends.push_back({cells[0], normal, weight});
        } else {
            throw InternalError("subdivision edge shared by more than two cells");
        }
    }

    std::sort(curve.bounded_edges.begin(), curve.bounded_edges.end(),
              [](const TropicalCurve::BoundedEdge& a, const TropicalCurve::BoundedEdge& b) {
                  return std::tie(a.u, a.v) < std::tie(b.u, b.v);
              });
    std::sort(curve.ends.begin(), curve.ends.end(),
              [](const TropicalCurve::End& a, const TropicalCurve::End& b) {
                  return std::tie(a.vertex, a.direction, a.weight) <
                         std::tie(b.vertex, b.direction, b.weight);
              });
    return curve;
}

BalanceReport check_balancing(const TropicalCurve& curve) {
    const int n = static_cast<int>(curve.vertices.size());
    auto check_vertex = [&](int v, const char* what) {
        if (v < 0 || v >= n)
            throw ValidationError(std::string(what) + " refers to missing vertex " +
                                  std::to_string(v));
    };
    std::vector<std::pair<long long, long long>> residual(static_cast<std::size_t>(n), {0, 0});

    for (const TropicalCurve::BoundedEdge& edge : curve.bounded_edges) {
        check_vertex(edge.u, "bounded edge");
        check_vertex(edge.v, "bounded edge");
        if (edge.weight < 1) throw ValidationError("edge weight must be a positive integer");
        const RatPoint& pu = curve.vertices[static_cast<std::size_t>(edge.u)];
        const RatPoint& pv = curve.vertices[static_cast<std::size_t>(edge.v)];
        LatticePoint dir = primitive_integer_vector(pv.x - pu.x, pv.y - pu.y);
        residual[static_cast<std::size_t>(edge.u)].first += edge.weight * dir.i;
        residual[static_cast<std::size_t>(edge.u)].second += edge.weight * dir.j;
        residual[static_cast<std::size_t>(edge.v)].first -= edge.weight * dir.i;
        residual[static_cast<std::size_t>(edge.v)].second -= edge.weight * dir.j;
    }
    for (const TropicalCurve::End& end : curve.ends) {
        check_vertex(end.vertex, "end");
        if (end.weight < 1) throw ValidationError("end weight must be a positive integer");
        if (end.direction == LatticePoint{0, 0})
            throw ValidationError("end with zero direction");
        residual[static_cast<std::size_t>(end.vertex)].first += end.weight * end.direction.i;
        residual[static_cast<std::size_t>(end.vertex)].second += end.weight * end.direction.j;
    }

    BalanceReport report;
    report.residuals.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto [rx, ry] = residual[static_cast<std::size_t>(v)];
        report.residuals.push_back({v, rx, ry});
        if (rx != 0 || ry != 0) report.balanced = false;
    }
    return report;
}

}  // namespace tropcount
