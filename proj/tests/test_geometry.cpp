#include <doctest.h>

#include <random>

#include "tropcount/geometry.hpp"

using namespace tropcount;

TEST_CASE("path order") {
    CHECK(lambda_less({0, 3}, {0, 0}));
    CHECK_FALSE(lambda_less({1, 2}, {0, 0}));
    CHECK_FALSE(lambda_less({2, 2}, {2, 2}));

    // strict total order on the triangle's points, from (0,d) to (d,0)
    for (int d = 1; d <= 6; ++d) {
        DegreeTriangle triangle(d);
        std::vector<LatticePoint> points = triangle.lattice_points();
        CHECK(points.size() == static_cast<std::size_t>(triangle.lattice_point_count()));
        CHECK(points.front() == LatticePoint{0, d});
        CHECK(points.back() == LatticePoint{d, 0});
        for (std::size_t a = 0; a < points.size(); ++a)
            for (std::size_t b = a + 1; b < points.size(); ++b) {
                CHECK(lambda_less(points[a], points[b]));
                CHECK_FALSE(lambda_less(points[b], points[a]));
            }
    }
}

TEST_CASE("boundary paths") {
    auto [plus1, minus1] = boundary_paths(1);
    CHECK(plus1 == LatticePath{{0, 1}, {1, 0}});
    CHECK(minus1 == LatticePath{{0, 1}, {0, 0}, {1, 0}});

    auto [plus3, minus3] = boundary_paths(3);
    CHECK(plus3.size() == 4);
    CHECK(minus3.size() == 7);

    auto [plus2, minus2] = boundary_paths(2);
    CHECK(minus2 == LatticePath{{0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}});

    for (int d = 1; d <= 6; ++d) {
        auto [plus, minus] = boundary_paths(d);
        validate_path(plus, d);
        validate_path(minus, d);
        // together they cover the boundary, overlapping only at the endpoints
        std::vector<LatticePoint> all(plus.begin(), plus.end());
        all.insert(all.end(), minus.begin(), minus.end());
        std::sort(all.begin(), all.end());
        std::size_t dupes = 0;
        for (std::size_t k = 1; k < all.size(); ++k)
            if (all[k] == all[k - 1]) ++dupes;
        CHECK(dupes == 2);
        CHECK(all.size() == static_cast<std::size_t>(3 * d) + 2);
    }
}

TEST_CASE("path validation") {
    validate_path({{0, 2}, {0, 0}, {1, 1}, {2, 0}}, 2);
    CHECK(path_degree({{0, 2}, {0, 0}, {1, 1}, {2, 0}}) == 2);
    CHECK_THROWS_AS(validate_path({{0, 2}, {2, 0}}, 3), ValidationError);       // wrong start
    CHECK_THROWS_AS(validate_path({{0, 2}, {1, 1}, {0, 0}}, 2), ValidationError);  // wrong end
    CHECK_THROWS_AS(validate_path({{0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}}, 2),
                    ValidationError);  // (2,1) outside
    CHECK_THROWS_AS(validate_path({{0, 2}, {1, 1}, {1, 1}, {2, 0}}, 2),
                    ValidationError);  // not strictly increasing
}

TEST_CASE("turns") {
    LatticePath minus1{{0, 1}, {0, 0}, {1, 0}};
    CHECK(turn_at(minus1, 1) == Turn::Left);
    CHECK(turn_at({{0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}}, 1) == Turn::Straight);
    CHECK(turn_at({{0, 2}, {1, 2}, {1, 0}, {2, 0}}, 1) == Turn::Right);
    CHECK_THROWS_AS(turn_at(minus1, 0), ValidationError);
    CHECK_THROWS_AS(turn_at(minus1, 2), ValidationError);
}

TEST_CASE("triangle measurements") {
    CHECK(normalized_area(LatticeTriangle{{0, 0}, {1, 0}, {0, 1}}) == 1);
    CHECK(normalized_area(LatticeTriangle{{0, 0}, {2, 0}, {0, 2}}) == 4);
    CHECK(normalized_area(LatticeTriangle{{0, 0}, {1, 1}, {2, 2}}) == 0);

    CHECK(edge_lattice_length({0, 0}, {2, 0}) == 2);
    CHECK(edge_lattice_length({0, 0}, {2, 1}) == 1);
    CHECK(edge_lattice_length({1, 1}, {4, 4}) == 3);
    CHECK_THROWS_AS(edge_lattice_length({1, 1}, {1, 1}), ValidationError);

    CHECK(interior_points(LatticeTriangle{{0, 0}, {1, 0}, {0, 1}}) == 0);
    CHECK(interior_points(LatticeTriangle{{0, 0}, {2, 0}, {0, 2}}) == 0);
    CHECK(interior_points(LatticeTriangle{{0, 0}, {3, 0}, {0, 3}}) == 1);
    CHECK_THROWS_AS(interior_points(LatticeTriangle{{0, 0}, {1, 1}, {2, 2}}), ValidationError);
}

TEST_CASE("Pick identity on random triangles") {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> coord(0, 10);
    int checked = 0;
    while (checked < 300) {
        LatticeTriangle t{{coord(rng), coord(rng)},
                          {coord(rng), coord(rng)},
                          {coord(rng), coord(rng)}};
        if (normalized_area(t) == 0) continue;
        ++checked;
        long long w1 = edge_lattice_length(t.a, t.b);
        long long w2 = edge_lattice_length(t.b, t.c);
        long long w3 = edge_lattice_length(t.c, t.a);
        CHECK(normalized_area(t) == 2 * interior_points(t) + w1 + w2 + w3 - 2);
    }
}

TEST_CASE("parallelogram cells") {
    LatticeParallelogram square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(normalized_area(square) == 2);
    LatticeParallelogram canon = square.canonical();
    CHECK(canon.a == LatticePoint{0, 0});
    CHECK(canon.b + canon.d == canon.a + canon.c);
    CHECK(cross(canon.b - canon.a, canon.d - canon.a) > 0);
    // same cell in any vertex order
    CHECK(LatticeParallelogram{{1, 1}, {0, 1}, {0, 0}, {1, 0}}.canonical() == canon);
    CHECK_THROWS_AS((LatticeParallelogram{{0, 0}, {1, 0}, {2, 1}, {0, 1}}.canonical()),
                    ValidationError);
}

TEST_CASE("subdivision validation") {
    DualSubdivision unit;
    unit.triangles.push_back({{0, 0}, {1, 0}, {0, 1}});
    unit.validate(1);

    DualSubdivision quad;  // the four unit cells of the degree-2 triangle
    quad.triangles.push_back({{0, 1}, {0, 0}, {1, 1}});
    quad.triangles.push_back({{0, 2}, {0, 1}, {1, 1}});
    quad.triangles.push_back({{1, 1}, {1, 0}, {2, 0}});
    quad.triangles.push_back({{0, 0}, {1, 1}, {1, 0}});
    quad.validate(2);

    DualSubdivision missing = quad;
    missing.triangles.pop_back();
    CHECK_THROWS_AS(missing.validate(2), ValidationError);  // area 3 != 4

    DualSubdivision outside = unit;
    outside.triangles.push_back({{0, 0}, {2, 0}, {0, 2}});
    CHECK_THROWS_AS(outside.validate(1), ValidationError);

    DualSubdivision degenerate;
    degenerate.triangles.push_back({{0, 0}, {1, 1}, {2, 2}});
    CHECK_THROWS_AS(degenerate.validate(3), ValidationError);
}
