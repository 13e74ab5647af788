#include "tropcount/multiplicity.hpp"

#include <algorithm>
#include <string>

namespace tropcount {

VertexData VertexData::from_triangle(const LatticeTriangle& t) {
    VertexData v;
    v.triangle = t.canonical();
    v.area = normalized_area(t);
    if (v.area == 0) throw ValidationError("vertex multiplicity of a degenerate cell");
    v.weights = {edge_lattice_length(t.a, t.b), edge_lattice_length(t.b, t.c),
                 edge_lattice_length(t.c, t.a)};
    std::sort(v.weights.begin(), v.weights.end());
    v.interior = interior_points(t);
    return v;
}

long long vertex_mult_complex(const VertexData& v) { return v.area; }

GwElement vertex_mult_gw(const VertexData& v) {
    if (v.area % 2 == 0) return GwElement::hyperbolic(v.area / 2);
    long long product = v.weights[0] * v.weights[1] * v.weights[2];
    long long entry = v.interior % 2 == 0 ? product : -product;
    return GwElement::hyperbolic((v.area - 1) / 2) + class_of(entry);
}

int vertex_mult_real_modfour(const VertexData& v) {
    switch (v.area % 4) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

int vertex_mult_real_interior(const VertexData& v) {
    for (long long w : v.weights)
        if (w % 2 == 0) return 0;
    return v.interior % 2 == 0 ? 1 : -1;
}

GwElement map_mult_gw_from_pair(long long mult_complex, int mult_real) {
    if (mult_complex < 1) throw ValidationError("complex multiplicity must be positive");
    if ((mult_real == 0) != (mult_complex % 2 == 0))
        throw ValidationError("real multiplicity " + std::to_string(mult_real) +
                              " is parity-inconsistent with complex multiplicity " +
                              std::to_string(mult_complex));
    if (mult_complex % 2 == 0) return GwElement::hyperbolic(mult_complex / 2);
    return GwElement::hyperbolic((mult_complex - 1) / 2) + class_of(mult_real);
}

GwElement subdivision_mult_gw(const DualSubdivision& cells, int degree) {
    cells.validate(degree);
    GwElement product = GwElement::one();
    for (const LatticeTriangle& t : cells.triangles)
        product = product * vertex_mult_gw(VertexData::from_triangle(t));
    return product;
}

}  // namespace tropcount
