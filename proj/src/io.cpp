#include "tropcount/io.hpp"

#include <fstream>

namespace tropcount {

namespace {

json point_to_json(const LatticePoint& p) { return json::array({p.i, p.j}); }

LatticePoint point_from_json(const json& doc) {
    if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number_integer() ||
        !doc[1].is_number_integer())
        throw ValidationError("lattice point must be an [i, j] integer pair");
    return {doc[0].get<int>(), doc[1].get<int>()};
}

std::string rational_to_string(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& doc) {
    if (doc.is_number_integer()) return Rational(doc.get<long long>());
    if (doc.is_string()) return Rational::parse(doc.get<std::string>());
    throw ValidationError("rational must be an integer or a 'num/den' string");
}

void expect_type(const json& doc, const std::string& type) {
    if (document_type(doc) != type)
        throw ValidationError("expected a document of type '" + type + "'");
}

}  // namespace

std::string document_type(const json& doc) {
    if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
        throw ValidationError("document has no 'type' field");
    return doc["type"].get<std::string>();
}

json path_to_json(const LatticePath& path) {
    int degree = path_degree(path);
    json points = json::array();
    for (const LatticePoint& p : path) points.push_back(point_to_json(p));
    return json{{"type", "lattice_path"}, {"degree", degree}, {"points", points}};
}

LatticePath path_from_json(const json& doc) {
    expect_type(doc, "lattice_path");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw ValidationError("lattice path document needs a 'points' array");
    LatticePath path;
    for (const json& p : doc["points"]) path.push_back(point_from_json(p));
    int degree = path_degree(path);  // validates order, endpoints, containment
    if (doc.contains("degree") && doc["degree"].get<int>() != degree)
        throw ValidationError("lattice path degree field disagrees with its endpoints");
    return path;
}

json subdivision_to_json(const DualSubdivision& cells, int degree, const LatticePath& path,
                         const GwElement& multiplicity) {
    json triangles = json::array();
    for (const LatticeTriangle& t : cells.triangles)
        triangles.push_back(json::array({point_to_json(t.a), point_to_json(t.b),
                                         point_to_json(t.c)}));
    json parallelograms = json::array();
    for (const LatticeParallelogram& p : cells.parallelograms)
        parallelograms.push_back(json::array({point_to_json(p.a), point_to_json(p.b),
                                              point_to_json(p.c), point_to_json(p.d)}));
    json points = json::array();
    for (const LatticePoint& p : path) points.push_back(point_to_json(p));
    return json{{"type", "dual_subdivision"},
                {"degree", degree},
                {"path", points},
                {"triangles", triangles},
                {"parallelograms", parallelograms},
                {"multiplicity", multiplicity.to_string()},
                {"rank", multiplicity.rank()},
                {"signature", multiplicity.signature()}};
}

SubdivisionFile subdivision_from_json(const json& doc) {
    expect_type(doc, "dual_subdivision");
    SubdivisionFile file;
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        throw ValidationError("subdivision document needs an integer 'degree'");
    file.degree = doc["degree"].get<int>();
    if (doc.contains("path"))
        for (const json& p : doc["path"]) file.path.push_back(point_from_json(p));
    if (!file.path.empty()) validate_path(file.path, file.degree);
    for (const json& t : doc.value("triangles", json::array())) {
        if (!t.is_array() || t.size() != 3)
            throw ValidationError("triangle cell must list exactly 3 vertices");
        file.cells.triangles.push_back(
            {point_from_json(t[0]), point_from_json(t[1]), point_from_json(t[2])});
    }
    for (const json& p : doc.value("parallelograms", json::array())) {
        if (!p.is_array() || p.size() != 4)
            throw ValidationError("parallelogram cell must list exactly 4 vertices");
        file.cells.parallelograms.push_back({point_from_json(p[0]), point_from_json(p[1]),
                                             point_from_json(p[2]), point_from_json(p[3])});
    }
    file.cells.validate(file.degree);
    file.multiplicity = doc.contains("multiplicity")
                            ? GwElement::parse(doc["multiplicity"].get<std::string>())
                            : GwElement::one();
    return file;
}

json polynomial_to_json(const TropicalPolynomial& p) {
    json terms = json::array();
    for (const auto& [exponent, coefficient] : p.terms)
        terms.push_back(json{{"i", exponent.i},
                             {"j", exponent.j},
                             {"num", coefficient.num()},
                             {"den", coefficient.den()}});
    return json{{"type", "tropical_polynomial"}, {"terms", terms}};
}

TropicalPolynomial polynomial_from_json(const json& doc) {
    expect_type(doc, "tropical_polynomial");
    if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
        throw ValidationError("tropical polynomial document needs a nonempty 'terms' array");
    TropicalPolynomial p;
    for (const json& term : doc["terms"]) {
        if (!term.contains("i") || !term.contains("j"))
            throw ValidationError("polynomial term needs exponents 'i' and 'j'");
        LatticePoint exponent{term["i"].get<int>(), term["j"].get<int>()};
        Rational coefficient;
        if (term.contains("c")) {
            coefficient = rational_from_json(term["c"]);
        } else {
            long long num = term.value("num", 0LL);
            long long den = term.value("den", 1LL);
            coefficient = Rational(num, den);
        }
        if (p.terms.count(exponent))
            throw ValidationError("polynomial lists exponent (" + std::to_string(exponent.i) +
                                  "," + std::to_string(exponent.j) + ") twice");
        p.terms[exponent] = coefficient;
    }
    return p;
}

json curve_to_json(const TropicalCurve& curve) {
    json vertices = json::array();
    for (const RatPoint& v : curve.vertices)
        vertices.push_back(json::array({rational_to_string(v.x), rational_to_string(v.y)}));
    json edges = json::array();
    for (const TropicalCurve::BoundedEdge& e : curve.bounded_edges)
        edges.push_back(json::array({e.u, e.v, e.weight}));
    json ends = json::array();
    for (const TropicalCurve::End& e : curve.ends)
        ends.push_back(json::array({e.vertex, point_to_json(e.direction), e.weight}));
    return json{{"type", "tropical_curve"},
                {"vertices", vertices},
                {"bounded_edges", edges},
                {"ends", ends}};
}

TropicalCurve curve_from_json(const json& doc) {
    expect_type(doc, "tropical_curve");
    TropicalCurve curve;
    for (const json& v : doc.value("vertices", json::array())) {
        if (!v.is_array() || v.size() != 2)
            throw ValidationError("curve vertex must be an [x, y] pair");
        curve.vertices.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
    }
    for (const json& e : doc.value("bounded_edges", json::array())) {
        if (!e.is_array() || e.size() != 3)
            throw ValidationError("bounded edge must be a [u, v, weight] triple");
        curve.bounded_edges.push_back(
            {e[0].get<int>(), e[1].get<int>(), e[2].get<long long>()});
    }
    for (const json& e : doc.value("ends", json::array())) {
        if (!e.is_array() || e.size() != 3)
            throw ValidationError("end must be a [vertex, [di, dj], weight] triple");
        curve.ends.push_back({e[0].get<int>(), point_from_json(e[1]), e[2].get<long long>()});
    }
    check_balancing(curve);  // validates indices and weights
    return curve;
}

json load_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open '" + file + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& err) {
        throw ValidationError("malformed JSON in '" + file + "': " + err.what());
    }
    return doc;
}

void save_text_file(const std::string& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + file + "'");
    out << content;
    if (!out) throw ValidationError("failed writing '" + file + "'");
}

}  // namespace tropcount
