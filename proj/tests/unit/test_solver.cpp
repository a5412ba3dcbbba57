#include <doctest.h>

#include <random>

#include "polyplace/errors.hpp"
#include "polyplace/instances.hpp"
#include "polyplace/solver.hpp"
#include "support/oracles.hpp"
#include "unit/helpers.hpp"

using namespace polyplace;
using test::q;
using test::rect_poly;

namespace {

OrthoPolygon centered_unit() { return rect_poly(q(-1, 2), q(-1, 2), q(1, 2), q(1, 2)); }

OrthoPolygon l_shape() { return test::poly({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}}); }

OrthoPolygon scaled(const OrthoPolygon& p, const Rational& s, const Point& shift = {}) {
    std::vector<Point> v;
    for (const Point& pt : p.vertices()) v.push_back({pt.x * s + shift.x, pt.y * s + shift.y});
    return validate_polygon(v);
}

void check_feasible(const OrthoPolygon& p, const OrthoPolygon& qp, const PlacementResult& r) {
    REQUIRE(r.feasible());
    CHECK(verify_containment(p, qp, r.lambda_star, r.witness));
    CHECK(oracle::placed_inside(p, qp, r.lambda_star, r.witness));
}

std::pair<OrthoPolygon, OrthoPolygon> random_instance(std::mt19937_64& rng) {
    RandomPolygonParams params;
    params.max_vertices = 20;
    return {random_orthogonal_polygon(rng, params), random_orthogonal_polygon(rng, params)};
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("verify_containment examples") {
    const auto u = centered_unit();
    CHECK(verify_containment(u, u, q(1), {q(0), q(0)}));
    CHECK_FALSE(verify_containment(u, u, q(1), {q(1, 2), q(0)}));
    const auto box = rect_poly(q(-3, 2), q(-1), q(3, 2), q(1));
    CHECK(verify_containment(u, box, q(2), {q(1, 2), q(0)}));
    CHECK_FALSE(verify_containment(u, box, q(2), {q(1, 2) + q(1, 100), q(0)}));
    CHECK_FALSE(verify_containment(u, box, q(0), {q(0), q(0)}));
}

TEST_CASE("verify_containment agrees with the grid oracle") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 150; ++it) {
        auto [p, qp] = random_instance(rng);
        const Rational lambda = oracle::random_rational(rng, 1, 3, 4) / 4;
        const Point tau{oracle::random_rational(rng, -30, 30, 3), oracle::random_rational(rng, -30, 30, 3)};
        const bool fast = verify_containment(p, qp, lambda, tau);
        CHECK(fast == oracle::placed_inside(p, qp, lambda, tau));
    }
    // also exercise positive cases through witnesses
    for (int it = 0; it < 30; ++it) {
        auto [p, qp] = random_instance(rng);
        const auto r = max_scale_baseline(p, qp);
        if (r.feasible()) CHECK(oracle::placed_inside(p, qp, r.lambda_star, r.witness));
    }
}

TEST_CASE("contains_fixed examples") {
    const auto u = rect_poly(q(3), q(4), q(4), q(5));
    const auto target = rect_poly(q(0), q(0), q(1), q(1));
    const auto tau = contains_fixed(u, target);
    REQUIRE(tau);
    CHECK(*tau == Point{q(-3), q(-4)});
    CHECK(verify_containment(u, target, q(1), *tau));
    CHECK_FALSE(contains_fixed(rect_poly(q(0), q(0), q(2), q(2)), target));
    // exact fit into the arm of an L
    const auto tau2 = contains_fixed(rect_poly(q(0), q(0), q(1), q(3)), l_shape());
    REQUIRE(tau2);
    CHECK(verify_containment(rect_poly(q(0), q(0), q(1), q(3)), l_shape(), q(1), *tau2));
    CHECK_FALSE(contains_fixed(rect_poly(q(0), q(0), q(2), q(2)), l_shape()));
}

TEST_CASE("contains_fixed is consistent with max_scale") {
    std::mt19937_64 rng(72);
    for (int it = 0; it < 60; ++it) {
        auto [p, qp] = random_instance(rng);
        const auto r = max_scale_baseline(p, qp);
        const auto tau = contains_fixed(p, qp);
        if (tau) {
            CHECK(oracle::placed_inside(p, qp, q(1), *tau));
            REQUIRE(r.feasible());
            CHECK(r.lambda_star >= q(1));
        }
        if (!r.feasible() || r.lambda_star < q(1)) CHECK_FALSE(tau);
    }
}

TEST_CASE("max_scale examples") {
    const auto u = centered_unit();
    for (bool baseline : {false, true}) {
        CAPTURE(baseline);
        auto run = [&](const OrthoPolygon& p, const OrthoPolygon& qp) {
            return baseline ? max_scale_baseline(p, qp) : max_scale(p, qp);
        };
        const auto box = rect_poly(q(0), q(0), q(3), q(2));
        const auto r1 = run(u, box);
        check_feasible(u, box, r1);
        CHECK(r1.lambda_star == q(2));
        const auto r2 = run(u, l_shape());
        check_feasible(u, l_shape(), r2);
        CHECK(r2.lambda_star == q(1));
        const auto r3 = run(l_shape(), l_shape());
        check_feasible(l_shape(), l_shape(), r3);
        CHECK(r3.lambda_star == q(1));
        CHECK(r3.witness == Point{q(0), q(0)});
    }
}

TEST_CASE("max_scale agrees with the baseline") {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 40; ++it) {
        auto [p, qp] = random_instance(rng);
        CAPTURE(it);
        const auto fast = max_scale(p, qp);
        const auto naive = max_scale(p, qp, {CoverImpl::Naive});
        const auto base = max_scale_baseline(p, qp);
        REQUIRE(fast.feasible() == base.feasible());
        REQUIRE(naive.feasible() == base.feasible());
        if (!base.feasible()) continue;
        CHECK(fast.lambda_star == base.lambda_star);
        CHECK(naive.lambda_star == base.lambda_star);
        CHECK(fast.witness == naive.witness);
        check_feasible(p, qp, fast);
        check_feasible(p, qp, base);
        CHECK(fast.stats.criticals == base.stats.criticals);
        CHECK(fast.stats.queries == base.stats.queries);
        const auto xs = fast.stats.x_forms;
        const auto ys = fast.stats.y_forms;
        CHECK(fast.stats.criticals <= xs * (xs - 1) / 2 + ys * (ys - 1) / 2);
    }
}

TEST_CASE("maximality") {
    std::mt19937_64 rng(74);
    for (int it = 0; it < 25; ++it) {
        auto [p, qp] = random_instance(rng);
        const auto r = max_scale(p, qp);
        REQUIRE(r.feasible());
        const PreparedInstance inst = prepare_instance(p, qp);
        const auto crit = critical_values(inst.cs);
        std::optional<Rational> above;
        for (const Rational& c : crit) {
            if (c <= r.lambda_star) break;
            above = c;
            if (c <= inst.lambda_cap) CHECK_FALSE(feasible_translation(inst, c));
        }
        if (above) {
            const Rational mid = midpoint(r.lambda_star, *above);
            const PreparedInstance wide = prepare_instance(p, qp, mid);
            CHECK_FALSE(feasible_translation(wide, mid));
        }
    }
}

TEST_CASE("transformation invariance") {
    std::mt19937_64 rng(75);
    for (int it = 0; it < 12; ++it) {
        auto [p, qp] = random_instance(rng);
        const auto r = max_scale(p, qp);
        REQUIRE(r.feasible());
        const Point shift{q(7, 3), q(-5)};
        CHECK(max_scale(scaled(p, q(1), shift), qp).lambda_star == r.lambda_star);
        CHECK(max_scale(p, scaled(qp, q(1), shift)).lambda_star == r.lambda_star);
        CHECK(max_scale(p, scaled(qp, q(3))).lambda_star == r.lambda_star * 3);
        CHECK(max_scale(scaled(p, q(2)), qp).lambda_star == r.lambda_star / 2);
    }
}

TEST_CASE("monotonicity under an appended rectangle") {
    const auto u = centered_unit();
    const auto box = rect_poly(q(0), q(0), q(3), q(2));
    const auto grown = test::poly({{0, 0}, {3, 0}, {3, 2}, {1, 2}, {1, 3}, {0, 3}});
    const auto a = max_scale_baseline(u, box);
    const auto b = max_scale_baseline(u, grown);
    CHECK(a.lambda_star <= b.lambda_star);
    const auto l = l_shape();
    const auto l_grown = test::poly({{0, 0}, {3, 0}, {3, 2}, {1, 2}, {1, 3}, {0, 3}});
    CHECK(max_scale(u, l).lambda_star <= max_scale(u, l_grown).lambda_star);
}

TEST_CASE("feasibility persists below for rectangles") {
    std::mt19937_64 rng(76);
    for (int it = 0; it < 15; ++it) {
        const AxisRect pr = oracle::random_rect(rng, -20, 20);
        if (pr.width().sign() == 0 || pr.height().sign() == 0) continue;
        const auto p = rect_poly(pr.x0, pr.y0, pr.x1, pr.y1);
        const auto qp = random_orthogonal_polygon(rng, {});
        const auto r = max_scale(p, qp);
        REQUIRE(r.feasible());
        const Rational half = r.lambda_star / 2;
        const PreparedInstance inst = prepare_instance(p, qp);
        const auto tau = feasible_translation(inst, half);
        REQUIRE(tau);
        CHECK(verify_containment(p, qp, half, *tau));
    }
}

TEST_CASE("max_scale_x examples") {
    const auto u = centered_unit();
    const auto box = rect_poly(q(0), q(0), q(3), q(2));
    const auto r1 = max_scale_x(u, box);
    check_feasible(u, box, r1);
    CHECK(r1.lambda_star == q(2));
    const auto thin = rect_poly(q(0), q(1), q(4), q(2));
    const auto r2 = max_scale_x(u, thin);
    check_feasible(u, thin, r2);
    CHECK(r2.lambda_star == q(1));
    // bottoms aligned: the unit square cannot use the upper arm of the L
    const auto r3 = max_scale_x(u, l_shape());
    check_feasible(u, l_shape(), r3);
    CHECK(r3.lambda_star == q(1));
}

TEST_CASE("max_scale_x is dominated and bottom aligned") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 40; ++it) {
        auto [p, qp] = random_instance(rng);
        const auto full = max_scale(p, qp);
        const auto x = max_scale_x(p, qp);
        if (!x.feasible()) continue;
        check_feasible(p, qp, x);
        REQUIRE(full.feasible());
        CHECK(x.lambda_star <= full.lambda_star);
        const AxisRect placed = bbox(transform(p, {x.lambda_star, x.witness}));
        CHECK(placed.y0 == bbox(qp).y0);
    }
}

TEST_CASE("sweep plan respects the update bound") {
    std::mt19937_64 rng(78);
    for (int it = 0; it < 10; ++it) {
        auto [p, qp] = random_instance(rng);
        const PreparedInstance inst = prepare_instance(p, qp);
        const SweepPlan plan = plan_sweep(inst);
        CHECK_NOTHROW(validate_trace(plan.trace));
        CHECK(plan.trace.initial.size() <= inst.cs.slot_count());
        REQUIRE(plan.enter_end.size() == plan.lambdas.size());
        for (std::size_t k = 0; k < plan.lambdas.size(); ++k) {
            CHECK(plan.lambdas[k] <= inst.lambda_cap);
            if (k > 0) CHECK(plan.lambdas[k] < plan.lambdas[k - 1]);
            CHECK(plan.enter_end[k] <= plan.leave_end[k]);
        }
    }
}

}  // TEST_SUITE
