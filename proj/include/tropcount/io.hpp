#pragma once

#include <string>

#include <json.hpp>

#include "tropcount/geometry.hpp"
#include "tropcount/gw.hpp"
#include "tropcount/path_count.hpp"
#include "tropcount/trop_poly.hpp"

namespace tropcount {

// JSON file formats read and written by the CLI. Every writer's output is
// accepted by the matching parser, and parsers re-validate the geometric
// invariants on load.

using json = nlohmann::json;

json path_to_json(const LatticePath& path);
LatticePath path_from_json(const json& doc);

json subdivision_to_json(const DualSubdivision& cells, int degree, const LatticePath& path,
                         const GwElement& multiplicity);
struct SubdivisionFile {
    int degree = 0;
    LatticePath path;
    DualSubdivision cells;
    GwElement multiplicity;
};
SubdivisionFile subdivision_from_json(const json& doc);

json polynomial_to_json(const TropicalPolynomial& p);
TropicalPolynomial polynomial_from_json(const json& doc);

json curve_to_json(const TropicalCurve& curve);
TropicalCurve curve_from_json(const json& doc);

// Type tag of a stored document ("lattice_path", "dual_subdivision",
// "tropical_polynomial" or "tropical_curve").
std::string document_type(const json& doc);

json load_json_file(const std::string& file);
void save_text_file(const std::string& file, const std::string& content);

}  // namespace tropcount
