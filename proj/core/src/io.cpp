#include "polyplace/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

using json = nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error("ParseError", what); }

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
}

Rational rational_from(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) return Rational::parse(std::to_string(u));
        return Rational(static_cast<std::int64_t>(u));
    }
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    parse_fail("expected an integer or a \"num/den\" string, got " + v.dump());
}

json rational_to(const Rational& r) { return r.to_string(); }

json point_to(const Point& p) { return json::array({rational_to(p.x), rational_to(p.y)}); }

Point point_from(const json& v) {
    if (!v.is_array() || v.size() != 2) parse_fail("expected a coordinate pair, got " + v.dump());
    return {rational_from(v[0]), rational_from(v[1])};
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) parse_fail(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::vector<std::int64_t> int_list(const json& v, const char* name) {
    if (!v.is_array()) parse_fail(std::string("'") + name + "' must be an array of integers");
    std::vector<std::int64_t> out;
    for (const json& x : v) {
        if (!x.is_number_integer()) parse_fail(std::string("'") + name + "' must contain integers only");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

std::vector<BitVector> vector_list(const json& v, const char* name) {
    if (!v.is_array()) parse_fail(std::string("'") + name + "' must be an array of vectors");
    std::vector<BitVector> out;
    for (const json& row : v) {
        BitVector bits;
        for (std::int64_t x : int_list(row, name)) bits.push_back(static_cast<int>(x));
        out.push_back(std::move(bits));
    }
    return out;
}

std::optional<std::int64_t> optional_universe(const json& doc) {
    if (!doc.contains("U")) return std::nullopt;
    if (!doc["U"].is_number_integer()) parse_fail("'U' must be an integer");
    return doc["U"].get<std::int64_t>();
}

json rect_to(const AxisRect& r) {
    return json::array({rational_to(r.x0), rational_to(r.x1), rational_to(r.y0), rational_to(r.y1)});
}

json inputs_to(const HardInputs& in) {
    struct Visitor {
        json operator()(const OvInputs& v) const { return {{"A", v.a}, {"B", v.b}}; }
        json operator()(const AverageInputs& v) const { return {{"A", v.a}}; }
        json operator()(const FourSumInputs& v) const {
            return {{"A1", v.a1}, {"A2", v.a2}, {"B1", v.b1}, {"B2", v.b2}};
        }
    };
    return std::visit(Visitor{}, in);
}

}  // namespace

OrthoPolygon parse_polygon_json(const std::string& text) {
    const json doc = parse_document(text);
    const json& verts = field(doc, "vertices");
    if (!verts.is_array()) parse_fail("'vertices' must be an array");
    std::vector<Point> pts;
    for (const json& v : verts) pts.push_back(point_from(v));
    return validate_polygon(pts);
}

std::string polygon_to_json(const OrthoPolygon& poly) {
    json verts = json::array();
    for (const Point& p : poly.vertices()) verts.push_back(point_to(p));
    return json{{"vertices", verts}}.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IoError", "cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error("IoError", "failed writing '" + path.string() + "'");
}

OrthoPolygon load_polygon(const std::filesystem::path& path) { return parse_polygon_json(read_text_file(path)); }

void save_polygon(const std::filesystem::path& path, const OrthoPolygon& poly) {
    write_text_file(path, polygon_to_json(poly));
}

std::string result_to_json(const PlacementResult& result) {
    const PlacementStats& s = result.stats;
    json stats{{"criticals", s.criticals},
               {"capped_criticals", s.capped_criticals},
               {"updates", s.updates},
               {"queries", s.queries},
               {"x_forms", s.x_forms},
               {"y_forms", s.y_forms},
               {"lambda_cap", rational_to(s.lambda_cap)}};
    if (s.lambda_sup) stats["lambda_sup"] = rational_to(*s.lambda_sup);
    json doc{{"feasible", result.feasible()}, {"stats", stats}};
    if (result.feasible()) {
        doc["lambda_star"] = rational_to(result.lambda_star);
        doc["tau"] = point_to(result.witness);
    }
    return doc.dump(2) + "\n";
}

ParsedResult parse_result_json(const std::string& text) {
    const json doc = parse_document(text);
    const json& f = field(doc, "feasible");
    if (!f.is_boolean()) parse_fail("'feasible' must be a boolean");
    ParsedResult r;
    r.feasible = f.get<bool>();
    if (r.feasible) {
        r.lambda_star = doc.contains("lambda_star") ? rational_from(doc["lambda_star"]) : Rational(1);
        r.witness = point_from(field(doc, "tau"));
    }
    return r;
}

std::string fixed_result_to_json(const std::optional<Point>& tau) {
    json doc{{"feasible", tau.has_value()}};
    if (tau) {
        doc["lambda_star"] = rational_to(Rational(1));
        doc["tau"] = point_to(*tau);
    }
    return doc.dump(2) + "\n";
}

HardInstance generate_from_json(HardKind kind, const std::string& text) {
    const json doc = parse_document(text);
    switch (kind) {
        case HardKind::Ov:
            return gen_ov(vector_list(field(doc, "A"), "A"), vector_list(field(doc, "B"), "B"));
        case HardKind::Average:
            return gen_average(int_list(field(doc, "A"), "A"), optional_universe(doc));
        case HardKind::FourSum:
            return gen_foursum(int_list(field(doc, "A1"), "A1"), int_list(field(doc, "A2"), "A2"),
                               int_list(field(doc, "B1"), "B1"), int_list(field(doc, "B2"), "B2"),
                               optional_universe(doc));
    }
    throw Error("InvalidInput", "unknown instance kind");
}

std::string instance_to_json(const HardInstance& inst) {
    const GenParams& g = inst.params;
    json params = json::object();
    const std::pair<const char*, const Rational*> fields[] = {{"U", &g.U},         {"L", &g.L},
                                                              {"Lprime", &g.Lprime}, {"eps", &g.eps},
                                                              {"delta", &g.delta},   {"M", &g.M},
                                                              {"Delta", &g.Delta}};
    for (const auto& [name, value] : fields) {
        if (value->sign() != 0) params[name] = rational_to(*value);
    }
    if (g.d > 0) params["d"] = g.d;
    json doc{{"kind", to_string(inst.kind())},
             {"mode", to_string(inst.mode)},
             {"threshold", rational_to(inst.threshold)},
             {"ground_truth_inputs", inputs_to(inst.inputs)},
             {"expected", brute_solve(inst.inputs)},
             {"params", params}};
    return doc.dump(2) + "\n";
}

std::string cover_to_json(const RectCover& cover) {
    json rects = json::array();
    for (const AxisRect& r : cover.rects) rects.push_back(rect_to(r));
    json doc{{"source", cover.source == CoverSource::Interior ? "interior" : "complement"}, {"rects", rects}};
    if (cover.frame) doc["frame"] = rect_to(*cover.frame);
    return doc.dump(2) + "\n";
}

}  // namespace polyplace
