#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyplace/cover_dynamic.hpp"
#include "polyplace/decompose.hpp"
#include "polyplace/forbidden.hpp"
#include "polyplace/geometry.hpp"

namespace polyplace {

// Witness translations are in the coordinates of the inputs: the placement
// is transform(P, {lambda, tau}), i.e. v -> lambda * (v - c) + c + tau with
// c the bbox center of P.

enum class PlacementStatus { Feasible, Infeasible };

struct PlacementStats {
    std::size_t criticals = 0;        // L: all positive critical values
    std::size_t capped_criticals = 0; // those not above lambda_cap
    std::size_t updates = 0;          // U: dynamic-cover updates in the trace
    std::size_t queries = 0;          // coverage queries answered
    std::size_t x_forms = 0;          // |X|
    std::size_t y_forms = 0;          // |Y|
    Rational lambda_cap;
    std::optional<Rational> lambda_sup;  // smallest critical, for infeasible results
};

struct PlacementResult {
    PlacementStatus status = PlacementStatus::Infeasible;
    Rational lambda_star;
    Point witness;
    PlacementStats stats;

    [[nodiscard]] bool feasible() const { return status == PlacementStatus::Feasible; }
};

// Centered polygons, covers and coordinate functions shared by the solvers.
// lambda_cap = min(wQ / wP, hQ / hP) bounds every feasible scale; the frame
// is inflated for max(lambda_cap, min_cap).
struct PreparedInstance {
    OrthoPolygon p;
    OrthoPolygon q;
    Point p_offset;
    Point q_offset;
    RectCover pcov;
    RectCover qcov;
    AxisRect box;
    Rational lambda_cap;
    CoordSets cs;

    // Translation of the centered problem -> translation of the inputs.
    [[nodiscard]] Point to_original(const Point& centered_tau) const;
};

PreparedInstance prepare_instance(const OrthoPolygon& p, const OrthoPolygon& q, const Rational& min_cap = Rational(0));

// Independent check by direct rectangle-pair overlap tests between the placed
// interior cover of P and a complement cover of Q; closed containment.
bool verify_containment(const OrthoPolygon& p, const OrthoPolygon& q, const Rational& lambda, const Point& tau);

// Static per-lambda test: a feasible translation for lambda P, if any.
// lambda must not exceed the frame's scale bound of `inst`.
std::optional<Point> feasible_translation(const PreparedInstance& inst, const Rational& lambda);

// Fixed-size containment (lambda = 1).
std::optional<Point> contains_fixed(const OrthoPolygon& p, const OrthoPolygon& q);

// The descending sweep as a dynamic-cover trace: initial snapshot above the
// first capped critical, then for each capped critical the updates entering
// {lambda_i} followed by those leaving it.
struct SweepPlan {
    TraceProblem trace;
    std::vector<Rational> lambdas;         // capped criticals, descending
    std::vector<std::size_t> enter_end;    // updates applied once {lambda_i} is reached
    std::vector<std::size_t> leave_end;    // updates applied once below lambda_i
    std::size_t all_criticals = 0;
};

SweepPlan plan_sweep(const PreparedInstance& inst);

struct MaxScaleOptions {
    CoverImpl impl = CoverImpl::OvermarsYap;
};

// Largest lambda such that lambda P fits in Q under translation, by sweeping
// the critical values through the offline dynamic rectangle cover.
PlacementResult max_scale(const OrthoPolygon& p, const OrthoPolygon& q, const MaxScaleOptions& options = {});

// Same answer by a static coverage test at every critical value.
PlacementResult max_scale_baseline(const OrthoPolygon& p, const OrthoPolygon& q);

// Translation restricted to x with the bbox bottoms of P and Q aligned.
PlacementResult max_scale_x(const OrthoPolygon& p, const OrthoPolygon& q);

}  // namespace polyplace
