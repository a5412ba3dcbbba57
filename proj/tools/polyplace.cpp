#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "polyplace/bench.hpp"
#include "polyplace/cover_dynamic.hpp"
#include "polyplace/decompose.hpp"
#include "polyplace/errors.hpp"
#include "polyplace/hardness.hpp"
#include "polyplace/io.hpp"
#include "polyplace/solver.hpp"
#include "polyplace/svg.hpp"

namespace fs = std::filesystem;
using namespace polyplace;

namespace {

std::string point_text(const Point& p) { return p.x.to_string() + " " + p.y.to_string(); }

CoverImpl parse_impl(const std::string& s) {
    if (s == "naive") return CoverImpl::Naive;
    if (s == "oy") return CoverImpl::OvermarsYap;
    throw Error("InvalidInput", "unknown implementation '" + s + "' (expected naive or oy)");
}

std::uint64_t env_seed() {
    if (const char* s = std::getenv("POLYPLACE_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw Error("InvalidInput", std::string("POLYPLACE_SEED is not an unsigned integer: '") + s + "'");
        }
    }
    return 1;
}

void write_plot(const fs::path& out, const OrthoPolygon& q, const std::optional<OrthoPolygon>& placed,
                std::vector<std::string> legend) {
    write_text_file(out, render_svg({q, placed, std::move(legend)}));
}

void print_result(const PlacementResult& r, bool json) {
    if (json) {
        std::cout << result_to_json(r);
        return;
    }
    const PlacementStats& s = r.stats;
    if (r.feasible()) {
        std::cout << "lambda_star: " << r.lambda_star.to_string() << "\n";
        std::cout << "tau: " << point_text(r.witness) << "\n";
    } else {
        std::cout << "infeasible";
        if (s.lambda_sup) std::cout << " (lambda_sup " << s.lambda_sup->to_string() << ")";
        std::cout << "\n";
    }
    std::cout << "L: " << s.criticals << "\nU: " << s.updates << "\nqueries: " << s.queries << "\n";
}

std::vector<std::string> result_legend(const PlacementResult& r) {
    if (!r.feasible()) return {"infeasible"};
    return {"lambda* = " + r.lambda_star.to_string(), "tau = (" + r.witness.x.to_string() + ", " +
                                                          r.witness.y.to_string() + ")"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Largest scaled copy of an orthogonal polygon inside another"};
    app.require_subcommand(1);

    std::string p_file;
    std::string q_file;
    bool json = false;

    auto* validate = app.add_subcommand("validate", "Validate a polygon file and print its summary");
    std::string validate_file;
    validate->add_option("polygon", validate_file, "Polygon JSON file")->required();

    auto* contain = app.add_subcommand("contain", "Fixed-size containment under translation");
    contain->add_option("--p", p_file, "Polygon to place")->required();
    contain->add_option("--q", q_file, "Container polygon")->required();
    contain->add_flag("--json", json, "JSON output");

    auto* maxscale = app.add_subcommand("maxscale", "Largest scale with free translation");
    bool baseline = false;
    std::string impl = "oy";
    std::string svg_out;
    std::string trace_out;
    maxscale->add_option("--p", p_file, "Polygon to place")->required();
    maxscale->add_option("--q", q_file, "Container polygon")->required();
    maxscale->add_flag("--baseline", baseline, "Static test at every critical value");
    maxscale->add_option("--impl", impl, "Dynamic cover implementation: naive or oy");
    maxscale->add_option("--svg", svg_out, "Write an SVG of the placement");
    maxscale->add_option("--trace-out", trace_out, "Write the dynamic-cover trace");
    maxscale->add_flag("--json", json, "JSON output");

    auto* maxscale_x = app.add_subcommand("maxscale-x", "Largest scale with bottoms aligned and x translation");
    maxscale_x->add_option("--p", p_file, "Polygon to place")->required();
    maxscale_x->add_option("--q", q_file, "Container polygon")->required();
    maxscale_x->add_option("--svg", svg_out, "Write an SVG of the placement");
    maxscale_x->add_flag("--json", json, "JSON output");

    auto* gen = app.add_subcommand("gen", "Generate a reduction instance");
    std::string kind;
    std::string input_file;
    std::string out_dir;
    gen->add_option("kind", kind, "ov, average or foursum")->required();
    gen->add_option("--input", input_file, "Input sets JSON")->required();
    gen->add_option("--out-dir", out_dir, "Output directory")->required();

    auto* dyncover = app.add_subcommand("dyncover", "Replay a dynamic rectangle cover trace");
    std::string trace_file;
    dyncover->add_option("--trace", trace_file, "Trace file")->required();
    dyncover->add_option("--impl", impl, "naive or oy");

    auto* bench = app.add_subcommand("bench", "Time max_scale against the baseline");
    std::string suite;
    std::vector<std::size_t> sizes;
    std::string csv_file;
    int repeats = 1;
    int per_size = 1;
    bench->add_option("--suite", suite, "random or generated")->required();
    bench->add_option("--sizes", sizes, "Instance sizes")->required()->delimiter(',');
    bench->add_option("--csv", csv_file, "CSV output file")->required();
    bench->add_option("--repeats", repeats, "Timing repetitions per instance (best is kept)");
    bench->add_option("--per-size", per_size, "Instances per size");

    auto* plot = app.add_subcommand("plot", "Render Q and optionally a placed copy of P");
    std::vector<std::string> placement;
    plot->add_option("--p", p_file, "Polygon to place");
    plot->add_option("--q", q_file, "Container polygon")->required();
    plot->add_option("--placement", placement, "lambda tau_x tau_y")->expected(3);
    plot->add_option("--svg", svg_out, "SVG output file")->required();

    auto* decompose = app.add_subcommand("decompose", "Dump the rectangle covers of a polygon");
    std::string decompose_file;
    std::string margin = "1";
    bool complement = false;
    decompose->add_option("polygon", decompose_file, "Polygon JSON file")->required();
    decompose->add_flag("--complement", complement, "Cover the frame outside the polygon instead");
    decompose->add_option("--margin", margin, "Frame margin around the bbox for --complement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: UsageError: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) {
            const OrthoPolygon poly = load_polygon(validate_file);
            const AxisRect b = bbox(poly);
            std::cout << "vertices: " << poly.size() << "\nmerged: " << poly.merged_vertices()
                      << "\narea: " << polygon_area(poly).to_string() << "\nbbox: " << b.x0.to_string() << " "
                      << b.y0.to_string() << " " << b.x1.to_string() << " " << b.y1.to_string() << "\n";
        } else if (*contain) {
            const OrthoPolygon p = load_polygon(p_file);
            const OrthoPolygon q = load_polygon(q_file);
            const auto tau = contains_fixed(p, q);
            if (json) {
                std::cout << fixed_result_to_json(tau);
            } else if (tau) {
                std::cout << "tau: " << point_text(*tau) << "\n";
            } else {
                std::cout << "NO\n";
            }
        } else if (*maxscale) {
            const OrthoPolygon p = load_polygon(p_file);
            const OrthoPolygon q = load_polygon(q_file);
            const PlacementResult r = baseline ? max_scale_baseline(p, q) : max_scale(p, q, {parse_impl(impl)});
            if (!trace_out.empty()) {
                std::ostringstream ss;
                write_trace(ss, plan_sweep(prepare_instance(p, q)).trace);
                write_text_file(trace_out, ss.str());
            }
            if (!svg_out.empty()) {
                std::optional<OrthoPolygon> placed;
                if (r.feasible()) placed = transform(p, {r.lambda_star, r.witness});
                write_plot(svg_out, q, placed, result_legend(r));
            }
            print_result(r, json);
        } else if (*maxscale_x) {
            const OrthoPolygon p = load_polygon(p_file);
            const OrthoPolygon q = load_polygon(q_file);
            const PlacementResult r = max_scale_x(p, q);
            if (!svg_out.empty()) {
                std::optional<OrthoPolygon> placed;
                if (r.feasible()) placed = transform(p, {r.lambda_star, r.witness});
                write_plot(svg_out, q, placed, result_legend(r));
            }
            print_result(r, json);
        } else if (*gen) {
            const HardInstance inst = generate_from_json(parse_hard_kind(kind), read_text_file(input_file));
            fs::create_directories(out_dir);
            save_polygon(fs::path(out_dir) / "P.json", inst.p);
            save_polygon(fs::path(out_dir) / "Q.json", inst.q);
            write_text_file(fs::path(out_dir) / "instance.json", instance_to_json(inst));
            std::cout << "wrote P.json (" << inst.p.size() << " vertices), Q.json (" << inst.q.size()
                      << " vertices), instance.json to " << out_dir << "\n";
        } else if (*dyncover) {
            std::ifstream in(trace_file);
            if (!in) throw Error("IoError", "cannot open '" + trace_file + "'");
            const TraceProblem tp = read_trace(in);
            const auto hit = first_uncover(tp, parse_impl(impl));
            if (hit) {
                std::cout << *hit << "\n";
            } else {
                std::cout << "none\n";
            }
        } else if (*bench) {
            const BenchSuite s = parse_bench_suite(suite);
            std::mt19937_64 rng(env_seed());
            std::vector<BenchRow> rows;
            for (std::size_t size : sizes) {
                for (int k = 0; k < std::max(per_size, 1); ++k) {
                    const BenchRow row = run_bench_case(make_bench_instance(s, size, rng), repeats);
                    if (!row.agree) throw Error("InternalError", "max_scale and the baseline disagree");
                    rows.push_back(row);
                    std::cerr << "q=" << row.q << " L=" << row.criticals << " fast=" << row.t_fast_ms
                              << "ms base=" << row.t_base_ms << "ms\n";
                }
            }
            write_text_file(csv_file, bench_csv(rows));
            if (rows.size() >= 2) {
                std::vector<double> qs, fast, base;
                for (const BenchRow& r : rows) {
                    qs.push_back(static_cast<double>(r.q));
                    fast.push_back(r.t_fast_ms);
                    base.push_back(r.t_base_ms);
                }
                std::cout << "slope_fast: " << loglog_slope(qs, fast) << "\nslope_base: " << loglog_slope(qs, base)
                          << "\n";
            }
        } else if (*plot) {
            const OrthoPolygon q = load_polygon(q_file);
            std::optional<OrthoPolygon> placed;
            std::vector<std::string> legend;
            if (!placement.empty()) {
                if (p_file.empty()) throw Error("InvalidInput", "--placement needs --p");
                const Placement pl{Rational::parse(placement[0]),
                                   {Rational::parse(placement[1]), Rational::parse(placement[2])}};
                placed = transform(load_polygon(p_file), pl);
                legend.push_back("lambda = " + pl.lambda.to_string());
            }
            write_plot(svg_out, q, placed, legend);
        } else if (*decompose) {
            const OrthoPolygon poly = load_polygon(decompose_file);
            if (complement) {
                std::cout << cover_to_json(cover_complement(poly, inflate(bbox(poly), Rational::parse(margin))));
            } else {
                std::cout << cover_to_json(cover_interior(poly));
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: InternalError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
