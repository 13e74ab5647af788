#include "tropcount/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tropcount {

namespace {

// Fixed-point decimal with 4 places, computed exactly and trimmed. This is
// the only place a rational is ever turned into drawing text.
std::string format_coord(const Rational& r) {
    const long long kScale = 10000;
    __int128 numerator = static_cast<__int128>(r.num()) * kScale;
    __int128 den = r.den();
    __int128 quotient = numerator / den;
    __int128 remainder = numerator % den;
    if (remainder < 0) remainder = -remainder;
    // round half away from zero
    if (2 * remainder >= den) quotient += numerator < 0 ? -1 : 1;
    bool negative = quotient < 0;
    if (negative) quotient = -quotient;
    long long whole = static_cast<long long>(quotient / kScale);
    long long frac = static_cast<long long>(quotient % kScale);
    std::string out = negative && (whole != 0 || frac != 0) ? "-" : "";
    out += std::to_string(whole);
    if (frac != 0) {
        std::string digits = std::to_string(frac);
        digits.insert(digits.begin(), 4 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

struct Canvas {
    RenderConfig cfg;
    Rational min_x, max_x, min_y, max_y;
    bool has_content = false;
    std::ostringstream body;

    explicit Canvas(const RenderConfig& config) : cfg(config) { cfg.validate(); }

    void include(const RatPoint& p) {
        if (!has_content) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            has_content = true;
        } else {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }

    std::string sx(const Rational& x) const {
        return format_coord(cfg.margin + cfg.scale * (x - min_x));
    }
    // The y axis is flipped so pictures keep the triangle's (0,d) top left.
    std::string sy(const Rational& y) const {
        return format_coord(cfg.margin + cfg.scale * (max_y - y));
    }

    void line(const RatPoint& a, const RatPoint& b, const std::string& cls,
              const std::string& extra = "") {
        body << "  <line class=\"" << cls << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y)
             << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y) << "\"" << extra << "/>\n";
    }

    void polygon(const std::vector<RatPoint>& pts, const std::string& cls) {
        body << "  <polygon class=\"" << cls << "\" points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k > 0) body << " ";
            body << sx(pts[k].x) << "," << sy(pts[k].y);
        }
        body << "\"/>\n";
    }

    void circle(const RatPoint& p, const std::string& cls) {
        body << "  <circle class=\"" << cls << "\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
             << "\" r=\"" << format_coord(cfg.scale / Rational(12)) << "\"/>\n";
    }

    void text(const RatPoint& p, const std::string& cls, const std::string& content) {
        body << "  <text class=\"" << cls << "\" x=\"" << sx(p.x) << "\" y=\"" << sy(p.y)
             << "\">" << content << "</text>\n";
    }

    std::string finish(bool with_arrow_marker = false) const {
        Rational width = cfg.margin * Rational(2);
        Rational height = cfg.margin * Rational(2);
        if (has_content) {
            width += cfg.scale * (max_x - min_x);
            height += cfg.scale * (max_y - min_y);
        }
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_coord(width)
            << "\" height=\"" << format_coord(height) << "\">\n";
        out << "  <style>\n"
               "    line { stroke: #000; stroke-width: 1.5; }\n"
               "    line.triangle, polygon.triangle { stroke: #999; stroke-width: 1; }\n"
               "    polygon { fill: none; stroke: #000; stroke-width: 1; }\n"
               "    polygon.triangle { stroke-dasharray: 4 3; }\n"
               "    circle.lattice { fill: #666; stroke: none; }\n"
               "    line.step { stroke: #000; stroke-width: 2.5; }\n"
               "    text.weight { font-family: sans-serif; font-size: 12px; }\n"
               "  </style>\n";
        if (with_arrow_marker)
            out << "  <defs>\n"
                   "    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
                   "refY=\"3\" orient=\"auto\">\n"
                   "      <path d=\"M0,0 L6,3 L0,6 z\"/>\n"
                   "    </marker>\n"
                   "  </defs>\n";
        out << body.str();
        out << "</svg>\n";
        return out.str();
    }
};

RatPoint lattice(const LatticePoint& p) { return {Rational(p.i), Rational(p.j)}; }

void include_triangle(Canvas& canvas, int degree) {
    canvas.include({Rational(0), Rational(0)});
    canvas.include({Rational(degree), Rational(degree)});
}

std::string weight_label(long long w) { return std::to_string(w); }

RatPoint midpoint(const RatPoint& a, const RatPoint& b) {
    return {(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
}

void label_long_sides(Canvas& canvas, const std::vector<LatticePoint>& poly) {
    for (std::size_t k = 0; k < poly.size(); ++k) {
        LatticePoint p1 = poly[k], p2 = poly[(k + 1) % poly.size()];
        long long len = edge_lattice_length(p1, p2);
        if (len > 1)
            canvas.text(midpoint(lattice(p1), lattice(p2)), "weight", weight_label(len));
    }
}

}  // namespace

std::string render_path(const LatticePath& path, const RenderConfig& cfg) {
    int degree = path_degree(path);
    Canvas canvas(cfg);
    include_triangle(canvas, degree);
    DegreeTriangle triangle(degree);
    canvas.polygon({lattice({0, 0}), lattice({degree, 0}), lattice({0, degree})}, "triangle");
    for (const LatticePoint& p : triangle.lattice_points()) canvas.circle(lattice(p), "lattice");
    for (std::size_t k = 1; k < path.size(); ++k)
        canvas.line(lattice(path[k - 1]), lattice(path[k]), "step");
    return canvas.finish();
}

std::string render_subdivision(const DualSubdivision& cells, int degree,
                               const RenderConfig& cfg) {
    cells.validate(degree);
    Canvas canvas(cfg);
    include_triangle(canvas, degree);
    DualSubdivision canon = cells;
    canon.canonicalize();
    for (const LatticeTriangle& t : canon.triangles) {
        canvas.polygon({lattice(t.a), lattice(t.b), lattice(t.c)}, "cell");
        if (cfg.label_weights) label_long_sides(canvas, {t.a, t.b, t.c});
    }
    for (const LatticeParallelogram& p : canon.parallelograms) {
        canvas.polygon({lattice(p.a), lattice(p.b), lattice(p.c), lattice(p.d)}, "cell");
        if (cfg.label_weights) label_long_sides(canvas, {p.a, p.b, p.c, p.d});
    }
    return canvas.finish();
}

std::string render_cells(const CellComplex& complex, const RenderConfig& cfg) {
    Canvas canvas(cfg);
    for (const SubdivisionCell& cell : complex.cells)
        for (const LatticePoint& p : cell.polygon) canvas.include(lattice(p));
    for (const SubdivisionCell& cell : complex.cells) {
        std::vector<RatPoint> pts;
        pts.reserve(cell.polygon.size());
        for (const LatticePoint& p : cell.polygon) pts.push_back(lattice(p));
        canvas.polygon(pts, "cell");
        if (cfg.label_weights) label_long_sides(canvas, cell.polygon);
    }
    return canvas.finish();
}

std::string render_curve(const TropicalCurve& curve, const RenderConfig& cfg) {
    BalanceReport report = check_balancing(curve);
    if (!report.balanced) throw ValidationError("refusing to draw an unbalanced curve");
    Canvas canvas(cfg);
    auto end_tip = [&](const TropicalCurve::End& end) {
        const RatPoint& v = curve.vertices[static_cast<std::size_t>(end.vertex)];
        return RatPoint{v.x + cfg.end_length * Rational(end.direction.i),
                        v.y + cfg.end_length * Rational(end.direction.j)};
    };
    for (const RatPoint& v : curve.vertices) canvas.include(v);
    for (const TropicalCurve::End& end : curve.ends) canvas.include(end_tip(end));

    for (const TropicalCurve::BoundedEdge& edge : curve.bounded_edges) {
        const RatPoint& u = curve.vertices[static_cast<std::size_t>(edge.u)];
        const RatPoint& v = curve.vertices[static_cast<std::size_t>(edge.v)];
        canvas.line(u, v, "edge");
        if (cfg.label_weights && edge.weight > 1)
            canvas.text(midpoint(u, v), "weight", weight_label(edge.weight));
    }
    for (const TropicalCurve::End& end : curve.ends) {
        const RatPoint& v = curve.vertices[static_cast<std::size_t>(end.vertex)];
        RatPoint tip = end_tip(end);
        canvas.line(v, tip, "end", " marker-end=\"url(#arrow)\"");
        if (cfg.label_weights && end.weight > 1)
            canvas.text(midpoint(v, tip), "weight", weight_label(end.weight));
    }
    return canvas.finish(true);
}

}  // namespace tropcount
