#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropcount/io.hpp"
#include "tropcount/path_count.hpp"
#include "tropcount/render.hpp"
#include "tropcount/trop_poly.hpp"

namespace {

using namespace tropcount;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_workers() {
    if (const char* env = std::getenv("TROPCOUNT_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

void enforce_degree_cap(int degree, int cap) {
    if (degree < 1) throw UsageError("degree must be at least 1");
    if (degree > cap)
        throw UsageError("degree " + std::to_string(degree) + " exceeds the guard of " +
                         std::to_string(cap) +
                         "; path counts grow combinatorially, raise --degree-cap to override");
}

std::string point_list(const LatticePath& path) {
    std::string out;
    for (const LatticePoint& p : path)
        out += "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
    return out;
}

void print_count_line(const CountResult& result, const std::string& flavor) {
    if (flavor == "complex") {
        std::cout << result.complex_count << "\n";
    } else if (flavor == "real") {
        std::cout << result.real_count << "\n";
    } else if (flavor == "quadratic") {
        std::cout << result.quadratic.to_string() << "\n";
    } else {
        std::cout << result.quadratic.to_string() << "  rank=" << result.complex_count
                  << "  signature=" << result.real_count << "\n";
    }
}

void print_curve(const TropicalCurve& curve) {
    std::cout << "vertices:\n";
    for (std::size_t k = 0; k < curve.vertices.size(); ++k)
        std::cout << "  v" << k << " = (" << curve.vertices[k].x.to_string() << ", "
                  << curve.vertices[k].y.to_string() << ")\n";
    std::cout << "bounded edges:\n";
    for (const TropicalCurve::BoundedEdge& e : curve.bounded_edges)
        std::cout << "  v" << e.u << " -- v" << e.v << "  weight " << e.weight << "\n";
    std::cout << "ends:\n";
    for (const TropicalCurve::End& e : curve.ends)
        std::cout << "  v" << e.vertex << " -> direction (" << e.direction.i << ","
                  << e.direction.j << ")  weight " << e.weight << "\n";
    BalanceReport report = check_balancing(curve);
    if (report.balanced) {
        std::cout << "balancing: OK (all residuals (0,0))\n";
    } else {
        std::cout << "balancing: FAILED\n";
        for (const BalanceReport::Entry& entry : report.residuals)
            if (entry.residual_x != 0 || entry.residual_y != 0)
                std::cout << "  v" << entry.vertex << " residual (" << entry.residual_x << ","
                          << entry.residual_y << ")\n";
    }
}

struct RenderFlags {
    std::string scale, margin, end_length;
    bool no_labels = false;

    RenderConfig config() const {
        RenderConfig cfg;
        if (!scale.empty()) cfg.scale = Rational::parse(scale);
        if (!margin.empty()) cfg.margin = Rational::parse(margin);
        if (!end_length.empty()) cfg.end_length = Rational::parse(end_length);
        cfg.label_weights = !no_labels;
        cfg.validate();
        return cfg;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--render-scale", scale, "Lattice-to-pixel scale, rational p/q");
        cmd->add_option("--render-margin", margin, "Canvas margin, rational p/q");
        cmd->add_option("--end-length", end_length,
                        "Drawn multiple of the primitive direction for unbounded ends");
        cmd->add_flag("--no-weight-labels", no_labels, "Omit weight labels");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Tropical counts of plane curves: lattice path enumeration with "
                 "quadratically enriched multiplicities, tropicalization and drawings"};
    app.require_subcommand(1);
    app.fallthrough();  // parent options may follow the subcommand
    int degree_cap = 7;
    app.add_option("--degree-cap", degree_cap,
                   "Guard on the degree (path counts grow combinatorially)")
        ->capture_default_str();

    auto* cmd_count = app.add_subcommand("count", "Count curves through 3d-1 general points");
    int count_degree = 0;
    std::string flavor = "all";
    int workers = default_workers();
    bool cross_check = false;
    cmd_count->add_option("--degree,-d", count_degree, "Curve degree")->required();
    cmd_count->add_option("--flavor", flavor, "complex, real, quadratic or all")
        ->check(CLI::IsMember({"complex", "real", "quadratic", "all"}))
        ->capture_default_str();
    cmd_count->add_option("--workers,-j", workers, "Worker threads")->capture_default_str();
    cmd_count->add_flag("--cross-check", cross_check)->group("");  // hidden

    auto* cmd_paths = app.add_subcommand("paths", "Stream the per-path multiplicity table");
    int paths_degree = 0;
    bool with_subdivision_count = false;
    cmd_paths->add_option("--degree,-d", paths_degree, "Curve degree")->required();
    cmd_paths->add_flag("--subdivision-count", with_subdivision_count,
                        "Also count the Newton subdivisions of every path");

    auto* cmd_subdivisions =
        app.add_subcommand("subdivisions", "Write every (path, Newton subdivision) pair");
    int sub_degree = 0;
    std::string out_dir;
    bool also_render = false;
    RenderFlags sub_render;
    cmd_subdivisions->add_option("--degree,-d", sub_degree, "Curve degree")->required();
    cmd_subdivisions->add_option("--out,-o", out_dir, "Output directory")->required();
    cmd_subdivisions->add_flag("--render", also_render, "Also write an SVG per subdivision");
    sub_render.attach(cmd_subdivisions);

    auto* cmd_tropicalize =
        app.add_subcommand("tropicalize", "Corner locus and balancing report of a polynomial");
    std::string trop_in, trop_out, trop_svg;
    RenderFlags trop_render;
    cmd_tropicalize->add_option("--in,-i", trop_in, "Tropical polynomial JSON file")->required();
    cmd_tropicalize->add_option("--out,-o", trop_out, "Write the curve as JSON");
    cmd_tropicalize->add_option("--svg", trop_svg, "Write the curve drawing");
    trop_render.attach(cmd_tropicalize);

    auto* cmd_render = app.add_subcommand("render", "Draw a stored path, subdivision or curve");
    std::string render_in, render_out;
    RenderFlags render_flags;
    cmd_render->add_option("--in,-i", render_in, "Input JSON file")->required();
    cmd_render->add_option("--out,-o", render_out, "Output SVG file")->required();
    render_flags.attach(cmd_render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (cmd_count->parsed()) {
        enforce_degree_cap(count_degree, degree_cap);
        CountOptions options;
        options.workers = workers;
        CountResult result = count(count_degree, options);
        print_count_line(result, flavor);
        if (cross_check) {
            long long complex_again = count_complex(count_degree);
            long long real_again = count_real(count_degree);
            if (complex_again != result.complex_count || real_again != result.real_count)
                throw InternalError("integer recursions disagree with rank/signature: " +
                                    std::to_string(complex_again) + "/" +
                                    std::to_string(real_again));
            std::cout << "cross-check: integer recursions agree\n";
        }
    } else if (cmd_paths->parsed()) {
        enforce_degree_cap(paths_degree, degree_cap);
        GwMuCache cache;
        long long index = 0;
        for_each_path(paths_degree, [&](const LatticePath& path) {
            PathMultiplicity pm = path_multiplicity(path, cache);
            std::cout << "path " << std::setw(4) << index++ << ": " << point_list(path)
                      << "  mu+=" << pm.mu_plus.to_string()
                      << "  mu-=" << pm.mu_minus.to_string() << "  mu=" << pm.mu.to_string()
                      << "  rank=" << pm.mu.rank() << "  signature=" << pm.mu.signature();
            if (with_subdivision_count)
                std::cout << "  subdivisions=" << possible_subdivisions(path).size();
            std::cout << "\n";
        });
    } else if (cmd_subdivisions->parsed()) {
        enforce_degree_cap(sub_degree, degree_cap);
        RenderConfig cfg = sub_render.config();
        std::filesystem::create_directories(out_dir);
        long long path_index = 0, written = 0;
        for_each_path(sub_degree, [&](const LatticePath& path) {
            std::vector<PathSubdivision> subs = possible_subdivisions(path);
            for (std::size_t s = 0; s < subs.size(); ++s) {
                std::ostringstream name;
                name << "d" << sub_degree << "_path" << std::setw(4) << std::setfill('0')
                     << path_index << "_sub" << std::setw(2) << std::setfill('0') << s;
                std::string base = (std::filesystem::path(out_dir) / name.str()).string();
                json doc = subdivision_to_json(subs[s].cells, sub_degree, path,
                                               subs[s].multiplicity);
                save_text_file(base + ".json", doc.dump(2) + "\n");
                if (also_render)
                    save_text_file(base + ".svg",
                                   render_subdivision(subs[s].cells, sub_degree, cfg));
                ++written;
            }
            ++path_index;
        });
        std::cout << "wrote " << written << " subdivision files for " << path_index
                  << " paths to " << out_dir << "\n";
    } else if (cmd_tropicalize->parsed()) {
        TropicalPolynomial poly = polynomial_from_json(load_json_file(trop_in));
        TropicalCurve curve = corner_locus(poly);
        print_curve(curve);
        if (!trop_out.empty()) save_text_file(trop_out, curve_to_json(curve).dump(2) + "\n");
        if (!trop_svg.empty()) save_text_file(trop_svg, render_curve(curve, trop_render.config()));
    } else if (cmd_render->parsed()) {
        json doc = load_json_file(render_in);
        std::string type = document_type(doc);
        RenderConfig cfg = render_flags.config();
        std::string svg;
        if (type == "lattice_path") {
            svg = render_path(path_from_json(doc), cfg);
        } else if (type == "dual_subdivision") {
            SubdivisionFile file = subdivision_from_json(doc);
            svg = render_subdivision(file.cells, file.degree, cfg);
        } else if (type == "tropical_curve") {
            svg = render_curve(curve_from_json(doc), cfg);
        } else {
            throw ValidationError("cannot draw a document of type '" + type +
                                  "'; tropicalize polynomials first");
        }
        save_text_file(render_out, svg);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
