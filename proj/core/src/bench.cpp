#include "polyplace/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "polyplace/errors.hpp"
#include "polyplace/instances.hpp"
#include "polyplace/solver.hpp"

namespace polyplace {
namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BenchSuite parse_bench_suite(const std::string& s) {
    if (s == "random") return BenchSuite::Random;
    if (s == "generated") return BenchSuite::Generated;
    throw Error("InvalidInput", "unknown bench suite '" + s + "'");
}

BenchInstance make_bench_instance(BenchSuite suite, std::size_t size, std::mt19937_64& rng) {
    if (size < 4) throw Error("InvalidInput", "bench sizes must be at least 4");
    if (suite == BenchSuite::Random) {
        RandomPolygonParams params;
        params.max_vertices = size;
        params.grid = std::max<std::size_t>(5, static_cast<std::size_t>(std::sqrt(static_cast<double>(size))) + 2);
        params.lo = -static_cast<std::int64_t>(10 * size);
        params.hi = static_cast<std::int64_t>(10 * size);
        RandomPolygonParams small = params;
        small.max_vertices = std::min<std::size_t>(size, 8);
        return {random_orthogonal_polygon(rng, small), random_orthogonal_polygon(rng, params)};
    }
    // Long random runs keep the pairwise coordinate differences, and with
    // them the critical scales, mostly distinct. P is a rectangle with the
    // aspect ratio of bbox(Q), so the bbox cap admits nearly all of them.
    const std::size_t steps = std::max<std::size_t>(1, size / 4);
    const auto max_run = static_cast<std::int64_t>(10 * steps * steps);
    OrthoPolygon q = staircase_corridor(rng, steps, 3, max_run);
    const AxisRect qb = bbox(q);
    const Rational h = qb.height() / qb.width();
    std::vector<Point> rect{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), h}, {Rational(0), h}};
    return {validate_polygon(rect), std::move(q)};
}

BenchRow run_bench_case(const BenchInstance& inst, int repeats) {
    BenchRow row;
    row.p = inst.p.size();
    row.q = inst.q.size();
    PlacementResult fast;
    PlacementResult base;
    row.t_fast_ms = row.t_base_ms = INFINITY;
    for (int r = 0; r < std::max(repeats, 1); ++r) {
        row.t_fast_ms = std::min(row.t_fast_ms, time_ms([&] { fast = max_scale(inst.p, inst.q); }));
        row.t_base_ms = std::min(row.t_base_ms, time_ms([&] { base = max_scale_baseline(inst.p, inst.q); }));
    }
    row.criticals = fast.stats.criticals;
    row.updates = fast.stats.updates;
    row.agree = fast.feasible() == base.feasible() && (!fast.feasible() || fast.lambda_star == base.lambda_star);
    return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "p,q,L,updates,t_fast_ms,t_base_ms\n";
    char buf[160];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%zu,%.3f,%.3f\n", r.p, r.q, r.criticals, r.updates, r.t_fast_ms,
                      r.t_base_ms);
        out += buf;
    }
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw Error("InvalidInput", "slope needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0) throw Error("InvalidInput", "slope needs distinct x values");
    return (n * sxy - sx * sy) / den;
}

}  // namespace polyplace
