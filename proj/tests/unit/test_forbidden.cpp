#include <doctest.h>

#include <map>
#include <random>

#include "polyplace/cover_static.hpp"
#include "polyplace/decompose.hpp"
#include "polyplace/forbidden.hpp"
#include "polyplace/instances.hpp"
#include "support/oracles.hpp"
#include "unit/helpers.hpp"

using namespace polyplace;
using test::q;

namespace {

struct Setup {
    CoordSets cs;
    Rational cap;
};

Setup setup(const OrthoPolygon& p, const OrthoPolygon& qp) {
    const auto pc = normalize_center(p).polygon;
    const auto qc = normalize_center(qp).polygon;
    const AxisRect pb = bbox(pc);
    const AxisRect qb = bbox(qc);
    Rational cap = min(qb.width() / pb.width(), qb.height() / pb.height());
    const AxisRect frame = inflate(qb, frame_margin(pb, cap));
    return {coordinate_functions(cover_interior(pc), cover_complement(qc, frame), qb), cap};
}

std::vector<OpenRect> open_rects_at(const CoordSets& cs, const Rational& lambda) {
    std::vector<OpenRect> out;
    for (const LinearRect& r : cs.rects) out.push_back(r.at(lambda));
    return out;
}

// Sampled lambdas: capped criticals and the midpoints between them.
std::vector<Rational> sample_lambdas(const std::vector<Rational>& crit, const Rational& cap, std::size_t limit,
                                     std::mt19937_64& rng) {
    std::vector<Rational> capped;
    for (const Rational& c : crit) {
        if (c <= cap) capped.push_back(c);
    }
    std::vector<Rational> out;
    for (std::size_t k = 0; k < capped.size(); ++k) {
        out.push_back(capped[k]);
        out.push_back(k + 1 < capped.size() ? midpoint(capped[k], capped[k + 1]) : capped[k] / 2);
    }
    std::shuffle(out.begin(), out.end(), rng);
    if (out.size() > limit) out.resize(limit);
    return out;
}

}  // namespace

TEST_SUITE("forbidden") {

TEST_CASE("forbidden_rect examples") {
    const LinearRect r = forbidden_rect({0, 1, 0, 1}, {2, 4, 0, 1});
    CHECK(r.a == LinearForm{-1, 2});
    CHECK(r.b == LinearForm{0, 4});
    CHECK(r.c == LinearForm{-1, 0});
    CHECK(r.d == LinearForm{0, 1});
    const LinearRect s = forbidden_rect({q(-1, 2), q(1, 2), q(-1, 2), q(1, 2)}, {q(-1, 2), q(1, 2), q(-1, 2), q(1, 2)});
    for (const Rational lam : {q(1, 3), q(1), q(7, 2)}) {
        const OpenRect o = s.at(lam);
        CHECK(o.x0 == -(1 + lam) / 2);
        CHECK(o.x1 == (1 + lam) / 2);
        CHECK(o.y0 == o.x0);
        CHECK(o.y1 == o.x1);
    }
    // a(2) = b(2) for P_i = [0,1]^2 and Q_j = [0,2]x[0,1]
    const LinearRect e = forbidden_rect({0, 1, 0, 1}, {0, 2, 0, 1});
    CHECK(e.a.at(2) == -2);
    const LinearRect d = forbidden_rect({0, 1, 0, 1}, {1, 1, 0, 1});
    CHECK(d.empty_at(0));
    CHECK_FALSE(d.contains({1, q(1, 2)}, 0));
}

TEST_CASE("forbidden_rect matches direct overlap tests") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 300; ++it) {
        const AxisRect pi = oracle::random_rect(rng, -5, 5);
        const AxisRect qj = oracle::random_rect(rng, -5, 5);
        // cover rectangles always have positive area
        if (qj.area() == 0) continue;
        const Rational lam = oracle::random_rational(rng, 0, 4, 3) + Rational(1, 5);
        const Point tau{oracle::random_rational(rng, -8, 8, 2), oracle::random_rational(rng, -8, 8, 2)};
        const AxisRect moved{lam * pi.x0 + tau.x, lam * pi.x1 + tau.x, lam * pi.y0 + tau.y, lam * pi.y1 + tau.y};
        const bool overlap = moved.x0 < qj.x1 && qj.x0 < moved.x1 && moved.y0 < qj.y1 && qj.y0 < moved.y1;
        CHECK(forbidden_rect(pi, qj).contains(tau, lam) == overlap);
    }
}

TEST_CASE("coordinate sets") {
    const auto p = test::rect_poly(-1, -1, 1, 1);
    const auto qp = test::rect_poly(-2, -2, 2, 2);
    const RectCover pc = cover_interior(p);
    const RectCover qc = cover_complement(qp, inflate(bbox(qp), 10));
    REQUIRE(pc.rects.size() == 1);
    REQUIRE(qc.rects.size() == 4);
    const CoordSets cs = coordinate_functions(pc, qc, bbox(qp));
    CHECK(cs.x.size() == 10);
    CHECK(cs.y.size() == 10);
    CHECK(cs.x[8].alpha == 0);
    CHECK(cs.x[8].beta == -2);
    CHECK(cs.x[9].alpha == 0);
    CHECK(cs.y[9].beta == 2);
    for (std::size_t f = 0; f < cs.x.size(); ++f) CHECK(cs.side_form(cs.x_refs[f].slot - 0, cs.x_refs[f].side) == cs.x[f]);
    for (std::size_t f = 0; f < cs.y.size(); ++f) CHECK(cs.side_form(cs.y_refs[f].slot, cs.y_refs[f].side) == cs.y[f]);
    for (std::size_t k = 0; k < cs.rect_count(); ++k) {
        CHECK(cs.side_form(k, Side::A) == cs.rects[k].a);
        CHECK(cs.side_form(k, Side::D) == cs.rects[k].d);
    }
}

TEST_CASE("critical values") {
    const std::vector<LinearForm> x1{{1, 0}, {-1, 4}, {0, 1}};
    CHECK(critical_values(x1, {}) == std::vector<Rational>{3, 2, 1});
    const std::vector<LinearForm> x2{{1, 1}, {1, 2}};
    const std::vector<LinearForm> y2{{0, 5}};
    CHECK(critical_values(x2, y2).empty());
    const std::vector<LinearForm> x3{{1, 2}, {0, 0}};
    CHECK(critical_values(x3, {}).empty());
    // identical forms never meet; duplicates across axes collapse
    const std::vector<LinearForm> x4{{1, 0}, {1, 0}, {0, 1}};
    const std::vector<LinearForm> y4{{-1, 2}, {0, 1}};
    CHECK(critical_values(x4, y4) == std::vector<Rational>{1});
    const auto ev = critical_events(x4, y4);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].crossings.size() == 3);
}

TEST_CASE("rank intervals with ties") {
    const std::vector<LinearForm> xs{{0, 2}, {0, 7}, {1, 0}};
    const RankOrder ro = rank_order(xs, 2);
    CHECK(ro.min_rank(0) == 1);
    CHECK(ro.max_rank(0) == 2);
    CHECK(ro.min_rank(2) == 1);
    CHECK(ro.max_rank(2) == 2);
    CHECK(ro.min_rank(1) == 3);
    CHECK(ro.max_rank(1) == 3);
    CHECK(rank_end(ro.min_rank(1)) == 5);
    CHECK(rank_start(2) == 4);
    CHECK(rank_end(3) == 5);
}

TEST_CASE("rank cell values") {
    const std::vector<Rational> v{1, 3, 3, 5};
    CHECK(rank_cell_value(v, 2) == 2);  // just above 1
    CHECK(rank_cell_value(v, 3) == 2);  // just below the tie group at 3
    CHECK(rank_cell_value(v, 4) == 3);  // inside the tie group
    CHECK(rank_cell_value(v, 5) == 3);
    CHECK(rank_cell_value(v, 6) == 4);
    CHECK(rank_cell_value(v, 7) == 4);
}

TEST_CASE("snapshot drops empty rectangles and keeps the boundary") {
    const auto p = test::rect_poly(-1, -1, 1, 1);
    const auto qp = test::rect_poly(-2, -2, 2, 2);
    const CoordSets cs =
        coordinate_functions(cover_interior(p), cover_complement(qp, inflate(bbox(qp), 10)), bbox(qp));
    const Snapshot s = rank_snapshot(cs, 1);
    CHECK(s.rects.size() == cs.slot_count());
    CHECK(s.nx == 20);
    for (const auto& r : s.rects) {
        if (r) CHECK(r->valid());
    }
    for (std::size_t k = 0; k < 4; ++k) CHECK(s.rects[cs.rect_count() + k].has_value());
    // the four boundary rects alone leave B uncovered
    std::vector<RankRect> boundary;
    for (std::size_t k = 0; k < 4; ++k) boundary.push_back(*s.rects[cs.rect_count() + k]);
    CHECK_FALSE(covers_box(boundary, s.box()));
}

TEST_CASE("rank-space coverage equals real coverage") {
    std::mt19937_64 rng(606);
    RandomPolygonParams pp;
    pp.max_vertices = 8;
    pp.grid = 3;
    RandomPolygonParams qq;
    qq.max_vertices = 12;
    qq.grid = 4;
    for (int it = 0; it < 15; ++it) {
        const auto p = random_orthogonal_polygon(rng, pp);
        const auto qp = random_orthogonal_polygon(rng, qq);
        const Setup su = setup(p, qp);
        const auto crit = critical_values(su.cs);
        for (const Rational& lam : sample_lambdas(crit, su.cap, 20, rng)) {
            const auto rects = open_rects_at(su.cs, lam);
            const bool real = oracle::open_rects_cover(rects, su.cs.box);
            const Snapshot snap = rank_snapshot(su.cs, lam);
            const auto live = snap.live();
            CHECK(covers_box(live, snap.box()) == real);
            if (const auto cell = find_hole(live, snap.box())) {
                const Point tau = rank_cell_point(su.cs, lam, *cell);
                CHECK(su.cs.box.contains(tau));
                CHECK_FALSE(oracle::point_in_any(rects, tau));
            }
        }
    }
}

TEST_CASE("snapshots are constant inside a region") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 10; ++it) {
        const Setup su = setup(random_orthogonal_polygon(rng), random_orthogonal_polygon(rng));
        const auto crit = critical_values(su.cs);
        for (std::size_t k = 0; k + 1 < crit.size() && k < 30; ++k) {
            const Rational a = crit[k + 1] + (crit[k] - crit[k + 1]) / 3;
            const Rational b = crit[k + 1] + (crit[k] - crit[k + 1]) * 2 / 3;
            CHECK(rank_snapshot(su.cs, a) == rank_snapshot(su.cs, b));
        }
    }
}

TEST_CASE("sweep updates replay every snapshot within the bound") {
    std::mt19937_64 rng(77);
    RandomPolygonParams small;
    small.max_vertices = 10;
    for (int it = 0; it < 12; ++it) {
        const Setup su = setup(random_orthogonal_polygon(rng, small), random_orthogonal_polygon(rng, small));
        const CoordSets& cs = su.cs;
        const auto events = critical_events(cs);
        std::vector<Rational> lams;
        for (const auto& e : events) lams.push_back(e.lambda);
        const Rational start = lams.empty() ? Rational(1) : region_sample_above(lams, 0);

        RectVersions ids(cs.slot_count());
        RankSweep sweep(cs, start);
        std::map<std::uint64_t, RankRect> live;
        for (const auto& [id, r] : register_snapshot(sweep.snapshot(), ids)) live.emplace(id, r);
        CHECK(sweep.snapshot() == rank_snapshot(cs, start));

        RectVersions diff_ids(cs.slot_count());
        register_snapshot(sweep.snapshot(), diff_ids);
        Snapshot prev = sweep.snapshot();

        std::size_t total = 0;
        const auto apply = [&](const std::vector<CoverUpdate>& ups) {
            bool seen_delete = false;
            for (const CoverUpdate& u : ups) {
                if (u.kind == UpdateKind::Add) {
                    CHECK_FALSE(seen_delete);
                    CHECK(live.emplace(u.id, u.rect).second);
                } else {
                    seen_delete = true;
                    CHECK(live.erase(u.id) == 1);
                }
            }
            total += ups.size();
        };
        const auto live_snapshot = [&](const Snapshot& shape) {
            Snapshot s{shape.nx, shape.ny, std::vector<std::optional<RankRect>>(cs.slot_count())};
            for (const auto& [id, r] : live) s.rects[RectVersions::slot_of(id)] = r;
            return s;
        };
        const std::size_t limit = std::min<std::size_t>(events.size(), 60);
        for (std::size_t i = 0; i < limit; ++i) {
            apply(sweep.enter(events[i], ids, 2 * i + 1));
            const Snapshot at = rank_snapshot(cs, events[i].lambda);
            CHECK(sweep.snapshot() == at);
            CHECK(live_snapshot(at) == at);
            diff_snapshots(prev, at, diff_ids, 2 * i + 1);
            prev = at;

            apply(sweep.leave(ids, 2 * i + 2));
            const Rational below = i + 1 < lams.size() ? midpoint(lams[i], lams[i + 1]) : lams[i] / 2;
            const Snapshot after = rank_snapshot(cs, below);
            CHECK(sweep.snapshot() == after);
            CHECK(live_snapshot(after) == after);
            diff_snapshots(prev, after, diff_ids, 2 * i + 2);
            prev = after;
        }
        const auto nx = static_cast<std::size_t>(cs.x.size());
        const auto ny = static_cast<std::size_t>(cs.y.size());
        CHECK(total <= 8 * (nx * nx + ny * ny));
    }
}

TEST_CASE("diff of identical snapshots is empty and a swap is add then delete") {
    Snapshot a{10, 10, {RankRect{2, 5, 1, 10}, std::nullopt}};
    Snapshot b = a;
    RectVersions ids(2);
    register_snapshot(a, ids);
    CHECK(diff_snapshots(a, b, ids, 1).empty());
    b.rects[0] = RankRect{2, 3, 1, 10};
    const auto d = diff_snapshots(a, b, ids, 1);
    REQUIRE(d.size() == 2);
    CHECK(d[0].kind == UpdateKind::Add);
    CHECK(d[0].rect == RankRect{2, 3, 1, 10});
    CHECK(d[1].kind == UpdateKind::Delete);
    CHECK(d[1].id == RectVersions::make(0, 1));
    CHECK(d[0].id == RectVersions::make(0, 2));
}

}  // TEST_SUITE
