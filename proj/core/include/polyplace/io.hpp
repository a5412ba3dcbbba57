#pragma once

#include <filesystem>
#include <string>

#include "polyplace/decompose.hpp"
#include "polyplace/geometry.hpp"
#include "polyplace/hardness.hpp"
#include "polyplace/solver.hpp"

namespace polyplace {

// Polygon files: {"vertices": [[x, y], ...]} where a coordinate is a JSON
// integer or a "num/den" string. Rationals are always written as "num/den".
// Malformed input throws ParseError; invalid geometry throws the
// validate_polygon errors.
OrthoPolygon parse_polygon_json(const std::string& text);
std::string polygon_to_json(const OrthoPolygon& poly);
OrthoPolygon load_polygon(const std::filesystem::path& path);
void save_polygon(const std::filesystem::path& path, const OrthoPolygon& poly);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

std::string result_to_json(const PlacementResult& result);

struct ParsedResult {
    bool feasible = false;
    Rational lambda_star;
    Point witness;
};
ParsedResult parse_result_json(const std::string& text);

// Placement for fixed-size containment: {"feasible": bool, "tau": [x, y]}.
std::string fixed_result_to_json(const std::optional<Point>& tau);

// Generator inputs: ov {"A": [[0,1],...], "B": [...]}, average {"A": [...],
// "U": optional}, foursum {"A1", "A2", "B1", "B2", "U": optional}.
HardInstance generate_from_json(HardKind kind, const std::string& text);

// Sidecar with kind, mode, threshold, ground-truth inputs and parameters.
std::string instance_to_json(const HardInstance& inst);

std::string cover_to_json(const RectCover& cover);

}  // namespace polyplace
