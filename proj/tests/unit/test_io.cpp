#include <doctest.h>

#include <functional>
#include <random>

#include "polyplace/errors.hpp"
#include "polyplace/instances.hpp"
#include "polyplace/io.hpp"
#include "polyplace/svg.hpp"
#include "unit/helpers.hpp"

using namespace polyplace;
using test::q;

namespace {

std::string error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("polygon json accepts integers and rationals") {
    const auto p = parse_polygon_json(R"({"vertices": [[0, 0], ["3/2", 0], ["3/2", "1/3"], [0, "1/3"]]})");
    CHECK(p.size() == 4);
    CHECK(bbox(p).x1 == q(3, 2));
    CHECK(bbox(p).y1 == q(1, 3));
    const auto again = parse_polygon_json(polygon_to_json(p));
    CHECK(again == p);
}

TEST_CASE("polygon json errors") {
    CHECK(error_kind([] { parse_polygon_json("{"); }) == "ParseError");
    CHECK(error_kind([] { parse_polygon_json(R"({"verts": []})"); }) == "ParseError");
    CHECK(error_kind([] { parse_polygon_json(R"({"vertices": [[0.5, 0], [1, 0], [1, 1], [0, 1]]})"); }) ==
          "ParseError");
    CHECK(error_kind([] { parse_polygon_json(R"({"vertices": [["1/0", 0], [1, 0], [1, 1], [0, 1]]})"); }) != "");
    CHECK(error_kind([] { parse_polygon_json(R"({"vertices": [[0, 0], [1, 1], [0, 1]]})"); }) == "NonRectilinear");
}

TEST_CASE("random polygons round trip") {
    std::mt19937_64 rng(91);
    for (int it = 0; it < 50; ++it) {
        const auto p = random_orthogonal_polygon(rng);
        CHECK(parse_polygon_json(polygon_to_json(p)) == p);
    }
}

TEST_CASE("result json round trip re-verifies") {
    std::mt19937_64 rng(92);
    for (int it = 0; it < 20; ++it) {
        const auto p = random_orthogonal_polygon(rng);
        const auto qp = random_orthogonal_polygon(rng);
        const auto r = max_scale(p, qp);
        const ParsedResult back = parse_result_json(result_to_json(r));
        REQUIRE(back.feasible == r.feasible());
        if (!back.feasible) continue;
        CHECK(back.lambda_star == r.lambda_star);
        CHECK(back.witness == r.witness);
        CHECK(verify_containment(p, qp, back.lambda_star, back.witness));
    }
    const auto fixed = parse_result_json(fixed_result_to_json(Point{q(1, 2), q(-3)}));
    CHECK(fixed.feasible);
    CHECK(fixed.lambda_star == q(1));
    CHECK(fixed.witness == Point{q(1, 2), q(-3)});
    CHECK_FALSE(parse_result_json(fixed_result_to_json(std::nullopt)).feasible);
}

TEST_CASE("generator inputs") {
    const auto ov = generate_from_json(HardKind::Ov, R"({"A": [[0, 1]], "B": [[1, 0]]})");
    CHECK(ov.kind() == HardKind::Ov);
    const auto av = generate_from_json(HardKind::Average, R"({"A": [1, 2, 3], "U": 10})");
    CHECK(av.params.U == q(10));
    const auto fs = generate_from_json(HardKind::FourSum, R"({"A1": [0], "A2": [3], "B1": [1], "B2": [4]})");
    CHECK(fs.threshold == fs.params.M - q(8));
    const std::string side = instance_to_json(fs);
    CHECK(side.find("\"threshold\"") != std::string::npos);
    CHECK(side.find("\"expected\": true") != std::string::npos);
    CHECK(error_kind([] { generate_from_json(HardKind::Average, R"({"B": [1]})"); }) == "ParseError");
    CHECK(error_kind([] { generate_from_json(HardKind::Ov, R"({"A": [[0, 3]], "B": [[1, 0]]})"); }) ==
          "NonBinaryVector");
    CHECK(parse_hard_kind("4sum") == HardKind::FourSum);
    CHECK(error_kind([] { parse_hard_kind("5sum"); }) == "InvalidInput");
}

TEST_CASE("svg is deterministic") {
    const auto qp = test::poly({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}});
    const auto placed = transform(test::rect_poly(q(0), q(0), q(1), q(1)), {q(1), {q(0), q(0)}});
    const SvgScene scene{qp, placed, {"lambda* = 1/1"}};
    const std::string a = render_svg(scene);
    CHECK(a == render_svg(scene));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("lambda* = 1/1") != std::string::npos);
    CHECK(a.find("<path") != a.rfind("<path"));
}

}  // TEST_SUITE
