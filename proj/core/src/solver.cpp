#include "polyplace/solver.hpp"

#include <algorithm>

#include "polyplace/cover_static.hpp"
#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

[[noreturn]] void internal(const std::string& what) { throw Error("InternalError", what); }

std::vector<OpenRect> open_rects_at(const CoordSets& cs, const Rational& lambda) {
    std::vector<OpenRect> out;
    out.reserve(cs.rects.size());
    for (const LinearRect& r : cs.rects) {
        OpenRect o = r.at(lambda);
        if (!o.empty()) out.push_back(std::move(o));
    }
    return out;
}

bool open_overlap(const AxisRect& a, const AxisRect& b) {
    return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

// First index of a descending list whose value does not exceed cap.
std::size_t first_capped(const std::vector<Rational>& desc, const Rational& cap) {
    return static_cast<std::size_t>(
        std::partition_point(desc.begin(), desc.end(), [&](const Rational& v) { return v > cap; }) - desc.begin());
}

PlacementResult feasible_result(const Rational& lambda, const Point& tau, PlacementStats stats) {
    PlacementResult r;
    r.status = PlacementStatus::Feasible;
    r.lambda_star = lambda;
    r.witness = tau;
    r.stats = std::move(stats);
    return r;
}

PlacementResult infeasible_result(PlacementStats stats, const std::vector<Rational>& desc) {
    PlacementResult r;
    r.status = PlacementStatus::Infeasible;
    if (!desc.empty()) stats.lambda_sup = desc.back();
    r.stats = std::move(stats);
    return r;
}

PlacementStats base_stats(const PreparedInstance& inst) {
    PlacementStats s;
    s.x_forms = inst.cs.x.size();
    s.y_forms = inst.cs.y.size();
    s.lambda_cap = inst.lambda_cap;
    return s;
}

}  // namespace

Point PreparedInstance::to_original(const Point& centered_tau) const {
    return centered_tau + q_offset - p_offset;
}

PreparedInstance prepare_instance(const OrthoPolygon& p, const OrthoPolygon& q, const Rational& min_cap) {
    Centered pc = normalize_center(p);
    Centered qc = normalize_center(q);
    const AxisRect pb = bbox(pc.polygon);
    const AxisRect qb = bbox(qc.polygon);
    Rational cap = min(qb.width() / pb.width(), qb.height() / pb.height());
    const AxisRect frame = inflate(qb, frame_margin(pb, max(cap, min_cap)));
    RectCover pcov = cover_interior(pc.polygon);
    RectCover qcov = cover_complement(qc.polygon, frame);
    CoordSets cs = coordinate_functions(pcov, qcov, qb);
    return {std::move(pc.polygon), std::move(qc.polygon), std::move(pc.offset), std::move(qc.offset),
            std::move(pcov), std::move(qcov), qb, std::move(cap), std::move(cs)};
}

bool verify_containment(const OrthoPolygon& p, const OrthoPolygon& q, const Rational& lambda, const Point& tau) {
    if (lambda.sign() <= 0) return false;
    const Point c = bbox(p).center();
    std::vector<AxisRect> placed;
    for (const AxisRect& r : cover_interior(p).rects) {
        placed.push_back({lambda * (r.x0 - c.x) + c.x + tau.x, lambda * (r.x1 - c.x) + c.x + tau.x,
                          lambda * (r.y0 - c.y) + c.y + tau.y, lambda * (r.y1 - c.y) + c.y + tau.y});
    }
    const AxisRect qb = bbox(q);
    if (!qb.contains(c + tau)) return false;
    AxisRect frame = qb;
    for (const AxisRect& r : placed) {
        frame = {min(frame.x0, r.x0), max(frame.x1, r.x1), min(frame.y0, r.y0), max(frame.y1, r.y1)};
    }
    const RectCover outside = cover_complement(q, inflate(frame, 1));
    for (const AxisRect& a : placed) {
        for (const AxisRect& b : outside.rects) {
            if (open_overlap(a, b)) return false;
        }
    }
    return true;
}

std::optional<Point> feasible_translation(const PreparedInstance& inst, const Rational& lambda) {
    const auto hole = find_open_hole(open_rects_at(inst.cs, lambda), inst.box);
    if (!hole) return std::nullopt;
    return inst.to_original(*hole);
}

std::optional<Point> contains_fixed(const OrthoPolygon& p, const OrthoPolygon& q) {
    const PreparedInstance inst = prepare_instance(p, q, Rational(1));
    if (inst.lambda_cap < Rational(1)) return std::nullopt;
    return feasible_translation(inst, Rational(1));
}

SweepPlan plan_sweep(const PreparedInstance& inst) {
    const CoordSets& cs = inst.cs;
    const std::vector<CriticalEvent> events = critical_events(cs);
    std::vector<Rational> all;
    all.reserve(events.size());
    for (const CriticalEvent& e : events) all.push_back(e.lambda);
    const std::size_t i0 = first_capped(all, inst.lambda_cap);

    SweepPlan plan;
    plan.all_criticals = events.size();
    const Rational start = i0 < all.size() ? region_sample_above(all, i0) : inst.lambda_cap + Rational(1);
    RankSweep sweep(cs, start);
    RectVersions ids(cs.slot_count());
    plan.trace.n = cs.slot_count();
    plan.trace.nx = sweep.snapshot().nx;
    plan.trace.ny = sweep.snapshot().ny;
    plan.trace.initial = register_snapshot(sweep.snapshot(), ids);
    auto& ups = plan.trace.updates;
    for (std::size_t i = i0; i < events.size(); ++i) {
        const std::size_t step = 2 * (i - i0) + 1;
        for (CoverUpdate& u : sweep.enter(events[i], ids, step)) ups.push_back(u);
        plan.enter_end.push_back(ups.size());
        for (CoverUpdate& u : sweep.leave(ids, step + 1)) ups.push_back(u);
        plan.leave_end.push_back(ups.size());
        plan.lambdas.push_back(events[i].lambda);
    }
    return plan;
}

PlacementResult max_scale(const OrthoPolygon& p, const OrthoPolygon& q, const MaxScaleOptions& options) {
    const PreparedInstance inst = prepare_instance(p, q);
    const SweepPlan plan = plan_sweep(inst);
    PlacementStats stats = base_stats(inst);
    stats.criticals = plan.all_criticals;
    stats.capped_criticals = plan.lambdas.size();
    stats.updates = plan.trace.updates.size();

    std::vector<RankRect> initial;
    for (const auto& kv : plan.trace.initial) initial.push_back(kv.second);
    if (!covers_box(initial, plan.trace.box())) internal("the region above the first capped critical is feasible");

    const auto hit = first_uncover(plan.trace, options.impl);
    if (!hit) {
        stats.queries = plan.lambdas.size();
        return infeasible_result(std::move(stats), plan.lambdas);
    }
    // Coverage can only be lost while entering a critical value: adds come
    // first, and the live set after a leave range is covered (closedness).
    const auto k = static_cast<std::size_t>(
        std::lower_bound(plan.enter_end.begin(), plan.enter_end.end(), *hit) - plan.enter_end.begin());
    const std::size_t range_begin = k == 0 ? 0 : plan.leave_end[k - 1];
    if (k >= plan.lambdas.size() || *hit <= range_begin) internal("coverage lost outside an entering range");
    stats.queries = k + 1;

    const Rational& lambda = plan.lambdas[k];
    const Snapshot snap = rank_snapshot(inst.cs, lambda);
    const auto cell = find_hole(snap.live(), snap.box());
    if (!cell) internal("uncovered critical without a rank-space hole");
    return feasible_result(lambda, inst.to_original(rank_cell_point(inst.cs, lambda, *cell)), std::move(stats));
}

PlacementResult max_scale_baseline(const OrthoPolygon& p, const OrthoPolygon& q) {
    const PreparedInstance inst = prepare_instance(p, q);
    const std::vector<Rational> all = critical_values(inst.cs);
    PlacementStats stats = base_stats(inst);
    stats.criticals = all.size();
    const std::size_t i0 = first_capped(all, inst.lambda_cap);
    const std::vector<Rational> capped(all.begin() + static_cast<std::ptrdiff_t>(i0), all.end());
    stats.capped_criticals = capped.size();
    for (const Rational& lambda : capped) {
        ++stats.queries;
        if (auto tau = feasible_translation(inst, lambda)) return feasible_result(lambda, *tau, std::move(stats));
    }
    return infeasible_result(std::move(stats), capped);
}

PlacementResult max_scale_x(const OrthoPolygon& p, const OrthoPolygon& q) {
    const PreparedInstance inst = prepare_instance(p, q);
    const CoordSets& cs = inst.cs;
    const AxisRect pb = bbox(inst.p);
    // bottom of lambda P at tau_y equals the bottom of Q
    const LinearForm ty{pb.height() / Rational(2), inst.box.y0};
    std::vector<LinearForm> xs = cs.x;
    std::vector<LinearForm> extra;
    for (const LinearRect& r : cs.rects) {
        extra.push_back({ty.alpha - r.c.alpha, ty.beta - r.c.beta});  // ty - c > 0
        extra.push_back({r.d.alpha - ty.alpha, r.d.beta - ty.beta});  // d - ty > 0
    }
    std::vector<Rational> all = critical_values(xs, {});
    for (const LinearForm& g : extra) {
        if (g.alpha.sign() == 0) continue;
        Rational root = -g.beta / g.alpha;
        if (root.sign() > 0) all.push_back(std::move(root));
    }
    std::sort(all.begin(), all.end(), std::greater<>{});
    all.erase(std::unique(all.begin(), all.end()), all.end());

    PlacementStats stats = base_stats(inst);
    stats.criticals = all.size();
    stats.y_forms = 0;
    const std::size_t i0 = first_capped(all, inst.lambda_cap);
    const std::vector<Rational> capped(all.begin() + static_cast<std::ptrdiff_t>(i0), all.end());
    stats.capped_criticals = capped.size();

    for (const Rational& lambda : capped) {
        ++stats.queries;
        const Rational tau_y = ty.at(lambda);
        std::vector<std::pair<Rational, Rational>> iv;
        for (const LinearRect& r : cs.rects) {
            if (!(r.c.at(lambda) < tau_y && tau_y < r.d.at(lambda))) continue;
            Rational a = r.a.at(lambda);
            Rational b = r.b.at(lambda);
            if (a < b) iv.emplace_back(std::move(a), std::move(b));
        }
        std::sort(iv.begin(), iv.end());
        // cur: smallest point not yet known to be covered
        Rational cur = inst.box.x0;
        std::size_t idx = 0;
        std::optional<Rational> best;
        while (true) {
            while (idx < iv.size() && iv[idx].first < cur) {
                if (!best || *best < iv[idx].second) best = iv[idx].second;
                ++idx;
            }
            if (best && cur < *best) {
                cur = *best;
                continue;
            }
            break;
        }
        if (cur <= inst.box.x1) {
            return feasible_result(lambda, inst.to_original({cur, tau_y}), std::move(stats));
        }
    }
    return infeasible_result(std::move(stats), capped);
}

}  // namespace polyplace
