#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tropcount/trop_poly.hpp"

using namespace tropcount;

namespace {

TropicalPolynomial tropical_line() {
    TropicalPolynomial p;  // x + y + t, coefficients are minus valuations
    p.set(1, 0, Rational(0));
    p.set(0, 1, Rational(0));
    p.set(0, 0, Rational(-1));
    return p;
}

TropicalPolynomial flat_support(const std::vector<LatticePoint>& support) {
    TropicalPolynomial p;
    for (const LatticePoint& q : support) p.terms[q] = Rational(0);
    return p;
}

std::vector<LatticePoint> triangle_support(int d) {
    return DegreeTriangle(d).lattice_points();
}

// Independent upper-hull oracle for generic lifts: a triple spans an upper
// face iff every other lifted point lies strictly below its plane.
std::set<std::vector<LatticePoint>> oracle_upper_faces(const TropicalPolynomial& p) {
    std::vector<LatticePoint> pts;
    std::vector<Rational> c;
    for (const auto& [q, coeff] : p.terms) {
        pts.push_back(q);
        c.push_back(coeff);
    }
    std::set<std::vector<LatticePoint>> faces;
    std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t k = b + 1; k < n; ++k) {
                long long det = cross(pts[b] - pts[a], pts[k] - pts[a]);
                if (det == 0) continue;
                bool upper = true;
                for (std::size_t m = 0; m < n && upper; ++m) {
                    if (m == a || m == b || m == k) continue;
                    // signed volume of the lifted tetrahedron against the
                    // plane through the lifted triple
                    Rational vol =
                        Rational(cross(pts[b] - pts[a], pts[k] - pts[a])) * (c[m] - c[a]) -
                        Rational(cross(pts[m] - pts[a], pts[k] - pts[a])) * (c[b] - c[a]) +
                        Rational(cross(pts[m] - pts[a], pts[b] - pts[a])) * (c[k] - c[a]);
                    // normalize the orientation so "below" is negative
                    if (det < 0) vol = -vol;
                    if (!(vol < Rational(0))) upper = false;
                }
                if (upper) {
                    std::vector<LatticePoint> face{pts[a], pts[b], pts[k]};
                    std::sort(face.begin(), face.end());
                    faces.insert(face);
                }
            }
        }
    }
    return faces;
}

}  // namespace

TEST_CASE("the tropical line") {
    TropicalCurve curve = corner_locus(tropical_line());
    REQUIRE(curve.vertices.size() == 1);
    CHECK(curve.vertices[0] == RatPoint{Rational(-1), Rational(-1)});
    CHECK(curve.bounded_edges.empty());
    REQUIRE(curve.ends.size() == 3);
    std::set<std::pair<int, int>> dirs;
    for (const TropicalCurve::End& end : curve.ends) {
        CHECK(end.weight == 1);
        dirs.insert({end.direction.i, end.direction.j});
    }
    CHECK(dirs == std::set<std::pair<int, int>>{{-1, 0}, {0, -1}, {1, 1}});
    CHECK(check_balancing(curve).balanced);

    CellComplex cells = regular_subdivision(tropical_line());
    REQUIRE(cells.cells.size() == 1);
    CHECK(cells.cells[0].polygon.size() == 3);
}

TEST_CASE("flat lift keeps one cell") {
    TropicalPolynomial p = flat_support(triangle_support(2));
    CellComplex cells = regular_subdivision(p);
    REQUIRE(cells.cells.size() == 1);
    CHECK(cells.cells[0].tight.size() == 6);
    CHECK(cells.cells[0].polygon.size() == 3);

    TropicalCurve curve = corner_locus(p);
    REQUIRE(curve.vertices.size() == 1);
    CHECK(curve.vertices[0] == RatPoint{Rational(0), Rational(0)});
    CHECK(curve.bounded_edges.empty());
    REQUIRE(curve.ends.size() == 3);
    for (const TropicalCurve::End& end : curve.ends) CHECK(end.weight == 2);
    CHECK(check_balancing(curve).balanced);
}

TEST_CASE("missing corner changes the Newton polygon") {
    std::vector<LatticePoint> support = triangle_support(2);
    std::erase(support, LatticePoint{2, 0});  // drop the x^2 exponent
    TropicalCurve curve = corner_locus(flat_support(support));
    REQUIRE(curve.vertices.size() == 1);
    CHECK(curve.bounded_edges.empty());
    REQUIRE(curve.ends.size() == 4);
    CHECK(check_balancing(curve).balanced);
}

TEST_CASE("constant shift moves the vertex") {
    TropicalPolynomial p;
    p.set(1, 0, Rational(0));
    p.set(0, 1, Rational(0));
    p.set(0, 0, Rational(5));
    TropicalCurve curve = corner_locus(p);
    REQUIRE(curve.vertices.size() == 1);
    CHECK(curve.vertices[0] == RatPoint{Rational(5), Rational(5)});
    // at the vertex all three monomials agree; off the vertex the maximum is
    // attained once (sampled on a small grid)
    auto value = [&](LatticePoint e, const RatPoint& w) {
        return p.terms.at(e) + Rational(e.i) * w.x + Rational(e.j) * w.y;
    };
    RatPoint v = curve.vertices[0];
    CHECK(value({1, 0}, v) == value({0, 1}, v));
    CHECK(value({1, 0}, v) == value({0, 0}, v));
    // sample points away from the three rays: the maximum is attained once
    for (auto [gx, gy] : {std::pair{3, 4}, {4, 3}, {6, 7}, {7, 6}, {6, 3}, {3, 6}}) {
        RatPoint w{Rational(gx), Rational(gy)};
        std::multiset<Rational> values{value({1, 0}, w), value({0, 1}, w), value({0, 0}, w)};
        CHECK(values.count(*values.rbegin()) == 1);
    }
}

TEST_CASE("generic concave lifts triangulate into unit cells") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long long> jitter(-999, 999);
    for (int d = 2; d <= 3; ++d) {
        for (int trial = 0; trial < 20;) {
            TropicalPolynomial p;
            for (const LatticePoint& q : triangle_support(d))
                p.terms[q] =
                    Rational(-(q.i * q.i + q.j * q.j)) + Rational(jitter(rng), 100000);
            CellComplex cells = regular_subdivision(p);
            bool generic = true;
            for (const SubdivisionCell& cell : cells.cells)
                if (cell.tight.size() != 3) generic = false;
            if (!generic) continue;  // resample on a coplanar tie
            ++trial;
            CHECK(cells.cells.size() == static_cast<std::size_t>(d) * d);

            std::set<std::vector<LatticePoint>> got;
            for (const SubdivisionCell& cell : cells.cells) {
                std::vector<LatticePoint> key = cell.tight;
                std::sort(key.begin(), key.end());
                got.insert(key);
            }
            CHECK(got == oracle_upper_faces(p));
        }
    }
}

TEST_CASE("balancing and end duality on random coefficients") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        int d = 1 + trial % 3;
        TropicalPolynomial p;
        for (const LatticePoint& q : triangle_support(d))
            p.terms[q] = Rational(num(rng), den(rng));
        TropicalCurve curve = corner_locus(p);
        CHECK(check_balancing(curve).balanced);
        // end directions with weight sum d along each side of the triangle
        std::map<std::pair<int, int>, long long> weight_by_direction;
        for (const TropicalCurve::End& end : curve.ends)
            weight_by_direction[{end.direction.i, end.direction.j}] += end.weight;
        CHECK(weight_by_direction ==
              std::map<std::pair<int, int>, long long>{
                  {{-1, 0}, d}, {{0, -1}, d}, {{1, 1}, d}});
        // cell areas tile the Newton polygon
        long long cell_area_sum = 0;
        for (const SubdivisionCell& cell : regular_subdivision(p).cells) {
            long long shoelace = 0;
            for (std::size_t k = 0; k < cell.polygon.size(); ++k)
                shoelace += cross(cell.polygon[k], cell.polygon[(k + 1) % cell.polygon.size()]);
            cell_area_sum += shoelace < 0 ? -shoelace : shoelace;
        }
        CHECK(cell_area_sum == static_cast<long long>(d) * d);
    }
}

TEST_CASE("degenerate support is rejected") {
    TropicalPolynomial collinear;
    collinear.set(0, 0, Rational(0));
    collinear.set(1, 1, Rational(2));
    collinear.set(2, 2, Rational(1));
    CHECK_THROWS_AS(regular_subdivision(collinear), ValidationError);
    TropicalPolynomial tiny;
    tiny.set(0, 0, Rational(0));
    tiny.set(1, 0, Rational(0));
    CHECK_THROWS_AS(corner_locus(tiny), ValidationError);
}

TEST_CASE("balancing report") {
    // the weighted vertex from a curve with a weight-2 edge
    TropicalCurve star;
    star.vertices.push_back({Rational(0), Rational(0)});
    star.ends.push_back({0, {-2, 1}, 1});
    star.ends.push_back({0, {0, -1}, 1});
    star.ends.push_back({0, {1, 0}, 2});
    BalanceReport ok = check_balancing(star);
    CHECK(ok.balanced);
    REQUIRE(ok.residuals.size() == 1);
    CHECK(ok.residuals[0].residual_x == 0);
    CHECK(ok.residuals[0].residual_y == 0);

    // corrupting one weight breaks exactly one vertex
    TropicalCurve bent = corner_locus(tropical_line());
    bent.ends[0].weight = 2;
    BalanceReport report = check_balancing(bent);
    CHECK_FALSE(report.balanced);
    int broken = 0;
    for (const BalanceReport::Entry& entry : report.residuals)
        if (entry.residual_x != 0 || entry.residual_y != 0) ++broken;
    CHECK(broken == 1);

    TropicalCurve bad;
    bad.ends.push_back({3, {1, 0}, 1});
    CHECK_THROWS_AS(check_balancing(bad), ValidationError);
    TropicalCurve zero_weight = corner_locus(tropical_line());
    zero_weight.ends[0].weight = 0;
    CHECK_THROWS_AS(check_balancing(zero_weight), ValidationError);
}

TEST_CASE("valuation helper negates") {
    TropicalPolynomial p = from_valuations({{{1, 0}, Rational(0)},
                                            {{0, 1}, Rational(0)},
                                            {{0, 0}, Rational(1)}});
    CHECK(p.terms.at({0, 0}) == Rational(-1));
    TropicalCurve curve = corner_locus(p);
    CHECK(curve.vertices[0] == RatPoint{Rational(-1), Rational(-1)});
}
