#pragma once

#include <array>

#include "tropcount/geometry.hpp"
#include "tropcount/gw.hpp"

namespace tropcount {

// Vertex multiplicities of the three counting flavors, computed from the
// triangle dual to a trivalent vertex: complex (normalized area), real (the
// mod-4 rule and its interior-point variant) and the GW-valued enrichment.

struct VertexData {
    LatticeTriangle triangle;
    std::array<long long, 3> weights;  // side lattice lengths, ascending
    long long area = 0;                // normalized area = complex multiplicity
    long long interior = 0;            // interior lattice point count

    static VertexData from_triangle(const LatticeTriangle& t);
};

long long vertex_mult_complex(const VertexData& v);

// Odd area: (area-1)/2 hyperbolics + <(-1)^interior * w1*w2*w3>.
// Even area: area/2 hyperbolics.
GwElement vertex_mult_gw(const VertexData& v);

// 0 for even area, +1 for area = 1 mod 4, -1 for area = 3 mod 4.
int vertex_mult_real_modfour(const VertexData& v);

// 0 if any side has even lattice length, otherwise (-1)^interior.
int vertex_mult_real_interior(const VertexData& v);

// Map-level enrichment from the complex/real multiplicity pair. The pair
// must be parity-consistent: real = 0 exactly when complex is even.
GwElement map_mult_gw_from_pair(long long mult_complex, int mult_real);

// Product of the GW vertex multiplicities over the triangle cells;
// parallelogram cells are edge crossings and contribute <1>.
GwElement subdivision_mult_gw(const DualSubdivision& cells, int degree);

}  // namespace tropcount
