#include "polyplace/forbidden.hpp"

#include <algorithm>
#include <numeric>

#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

struct RawCrossing {
    Rational lambda;
    Crossing crossing;
};

void collect_crossings(std::span<const LinearForm> forms, Axis axis, std::vector<RawCrossing>& out) {
    std::vector<std::uint32_t> idx(forms.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t a, std::uint32_t b) { return forms[a].alpha < forms[b].alpha; });
    // Pairs within the same slope class never cross.
    std::vector<std::size_t> class_end(idx.size());
    for (std::size_t s = idx.size(); s-- > 0;) {
        if (s + 1 < idx.size() && forms[idx[s + 1]].alpha == forms[idx[s]].alpha) {
            class_end[s] = class_end[s + 1];
        } else {
            class_end[s] = s + 1;
        }
    }
    for (std::size_t s = 0; s < idx.size(); ++s) {
        const LinearForm& f = forms[idx[s]];
        for (std::size_t t = class_end[s]; t < idx.size(); ++t) {
            const LinearForm& g = forms[idx[t]];
            Rational num = g.beta - f.beta;
            const Rational den = f.alpha - g.alpha;
            if (num.sign() * den.sign() <= 0) continue;
            num /= den;
            out.push_back({std::move(num), Crossing{axis, idx[s], idx[t]}});
        }
    }
}

std::optional<RankRect> slot_rect(const CoordSets& cs, std::size_t slot, const RankOrder& xo,
                                  const RankOrder& yo, std::int64_t nx, std::int64_t ny) {
    const std::size_t k = cs.rect_count();
    const auto bx0 = static_cast<std::uint32_t>(2 * k);
    const auto bx1 = static_cast<std::uint32_t>(2 * k + 1);
    if (slot < k) {
        const auto a = static_cast<std::uint32_t>(2 * slot);
        const RankRect r{2 * xo.max_rank(a), 2 * xo.min_rank(a + 1) - 1, 2 * yo.max_rank(a),
                         2 * yo.min_rank(a + 1) - 1};
        if (!r.valid()) return std::nullopt;
        return r;
    }
    switch (slot - k) {
        case kSlotLeft: return RankRect{1, 2 * xo.min_rank(bx0) - 1, 1, ny};
        case kSlotRight: return RankRect{2 * xo.max_rank(bx1), nx, 1, ny};
        case kSlotBottom: return RankRect{1, nx, 1, 2 * yo.min_rank(bx0) - 1};
        case kSlotTop: return RankRect{1, nx, 2 * yo.max_rank(bx1), ny};
        default: throw Error("InternalError", "slot out of range");
    }
}

std::vector<Rational> sorted_values(std::span<const LinearForm> forms, const Rational& lambda) {
    std::vector<Rational> v;
    v.reserve(forms.size());
    for (const LinearForm& f : forms) v.push_back(f.at(lambda));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

LinearRect forbidden_rect(const AxisRect& p_i, const AxisRect& q_j, const Point& center) {
    const Rational px0 = p_i.x0 - center.x;
    const Rational px1 = p_i.x1 - center.x;
    const Rational py0 = p_i.y0 - center.y;
    const Rational py1 = p_i.y1 - center.y;
    LinearRect r;
    r.a = {-px1, q_j.x0 - center.x};
    r.b = {-px0, q_j.x1 - center.x};
    r.c = {-py1, q_j.y0 - center.y};
    r.d = {-py0, q_j.y1 - center.y};
    return r;
}

const LinearForm& CoordSets::side_form(std::size_t slot, Side side) const {
    const std::size_t k = rect_count();
    switch (side) {
        case Side::A: return x.at(2 * slot);
        case Side::B: return x.at(2 * slot + 1);
        case Side::C: return y.at(2 * slot);
        case Side::D: return y.at(2 * slot + 1);
        case Side::BoxX0: return x.at(2 * k);
        case Side::BoxX1: return x.at(2 * k + 1);
        case Side::BoxY0: return y.at(2 * k);
        case Side::BoxY1: return y.at(2 * k + 1);
    }
    throw Error("InternalError", "unknown side");
}

CoordSets coordinate_functions(const RectCover& pcov, const RectCover& qcov, const AxisRect& box) {
    CoordSets cs;
    cs.box = box;
    const std::size_t k = pcov.rects.size() * qcov.rects.size();
    cs.rects.reserve(k);
    cs.x.reserve(2 * k + 2);
    cs.y.reserve(2 * k + 2);
    for (std::size_t i = 0; i < pcov.rects.size(); ++i) {
        for (std::size_t j = 0; j < qcov.rects.size(); ++j) {
            LinearRect r = forbidden_rect(pcov.rects[i], qcov.rects[j]);
            r.src = {i, j};
            const std::size_t slot = cs.rects.size();
            cs.x.push_back(r.a);
            cs.x.push_back(r.b);
            cs.y.push_back(r.c);
            cs.y.push_back(r.d);
            cs.x_refs.push_back({slot, Side::A});
            cs.x_refs.push_back({slot, Side::B});
            cs.y_refs.push_back({slot, Side::C});
            cs.y_refs.push_back({slot, Side::D});
            cs.rects.push_back(std::move(r));
        }
    }
    cs.x.push_back({Rational(0), box.x0});
    cs.x.push_back({Rational(0), box.x1});
    cs.y.push_back({Rational(0), box.y0});
    cs.y.push_back({Rational(0), box.y1});
    cs.x_refs.push_back({k + kSlotLeft, Side::BoxX0});
    cs.x_refs.push_back({k + kSlotRight, Side::BoxX1});
    cs.y_refs.push_back({k + kSlotBottom, Side::BoxY0});
    cs.y_refs.push_back({k + kSlotTop, Side::BoxY1});
    return cs;
}

std::vector<CriticalEvent> critical_events(std::span<const LinearForm> xs, std::span<const LinearForm> ys) {
    std::vector<RawCrossing> raw;
    collect_crossings(xs, Axis::X, raw);
    collect_crossings(ys, Axis::Y, raw);
    std::sort(raw.begin(), raw.end(),
              [](const RawCrossing& a, const RawCrossing& b) { return a.lambda > b.lambda; });
    std::vector<CriticalEvent> events;
    for (RawCrossing& c : raw) {
        if (events.empty() || events.back().lambda != c.lambda) {
            events.push_back({std::move(c.lambda), {}});
        }
        events.back().crossings.push_back(c.crossing);
    }
    return events;
}

std::vector<CriticalEvent> critical_events(const CoordSets& cs) { return critical_events(cs.x, cs.y); }

std::vector<Rational> critical_values(std::span<const LinearForm> xs, std::span<const LinearForm> ys) {
    std::vector<RawCrossing> raw;
    collect_crossings(xs, Axis::X, raw);
    collect_crossings(ys, Axis::Y, raw);
    std::vector<Rational> out;
    out.reserve(raw.size());
    for (RawCrossing& c : raw) out.push_back(std::move(c.lambda));
    std::sort(out.begin(), out.end(), std::greater<>{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> critical_values(const CoordSets& cs) { return critical_values(cs.x, cs.y); }

RankOrder rank_order(std::span<const LinearForm> forms, const Rational& lambda) {
    const std::size_t n = forms.size();
    std::vector<Rational> vals;
    vals.reserve(n);
    for (const LinearForm& f : forms) vals.push_back(f.at(lambda));
    RankOrder ro;
    ro.order.resize(n);
    std::iota(ro.order.begin(), ro.order.end(), 0u);
    std::sort(ro.order.begin(), ro.order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto c = vals[a] <=> vals[b];
        return c != 0 ? c < 0 : a < b;
    });
    ro.pos.resize(n);
    ro.group_lo.resize(n);
    ro.group_hi.resize(n);
    for (std::uint32_t p = 0; p < n; ++p) ro.pos[ro.order[p]] = p;
    std::uint32_t start = 0;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (p + 1 == n || vals[ro.order[p + 1]] != vals[ro.order[p]]) {
            for (std::uint32_t q = start; q <= p; ++q) {
                ro.group_lo[q] = start;
                ro.group_hi[q] = p;
            }
            start = p + 1;
        }
    }
    return ro;
}

std::vector<RankRect> Snapshot::live() const {
    std::vector<RankRect> out;
    out.reserve(rects.size());
    for (const auto& r : rects) {
        if (r) out.push_back(*r);
    }
    return out;
}

Snapshot snapshot_from_orders(const CoordSets& cs, const RankOrder& xo, const RankOrder& yo) {
    Snapshot s;
    s.nx = 2 * static_cast<std::int64_t>(cs.x.size());
    s.ny = 2 * static_cast<std::int64_t>(cs.y.size());
    s.rects.reserve(cs.slot_count());
    for (std::size_t slot = 0; slot < cs.slot_count(); ++slot) {
        s.rects.push_back(slot_rect(cs, slot, xo, yo, s.nx, s.ny));
    }
    return s;
}

Snapshot rank_snapshot(const CoordSets& cs, const Rational& lambda) {
    return snapshot_from_orders(cs, rank_order(cs.x, lambda), rank_order(cs.y, lambda));
}

Rational region_sample_above(std::span<const Rational> descending, std::size_t i) {
    if (i == 0) return descending[0] + Rational(1);
    return midpoint(descending[i - 1], descending[i]);
}

Rational rank_cell_value(std::span<const Rational> sorted, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(sorted.size());
    if (k < 1 || k > 2 * n) throw Error("InternalError", "rank cell outside the box");
    const std::int64_t r = (k + 1) / 2;
    const Rational& v = sorted[static_cast<std::size_t>(r - 1)];
    if (k % 2 == 1) {
        // end(r): just below v when r starts its tie group
        if (r == 1) return v - Rational(1);
        const Rational& prev = sorted[static_cast<std::size_t>(r - 2)];
        return prev == v ? v : midpoint(prev, v);
    }
    // start(r): just above v when r ends its tie group
    if (r == n) return v + Rational(1);
    const Rational& next = sorted[static_cast<std::size_t>(r)];
    return next == v ? v : midpoint(v, next);
}

Point rank_cell_point(const CoordSets& cs, const Rational& lambda, const Cell& cell) {
    return {rank_cell_value(sorted_values(cs.x, lambda), cell.x),
            rank_cell_value(sorted_values(cs.y, lambda), cell.y)};
}

std::vector<CoverUpdate> diff_snapshots(const Snapshot& prev, const Snapshot& next, RectVersions& ids,
                                        std::size_t step) {
    if (prev.rects.size() != next.rects.size()) throw Error("InternalError", "snapshot size mismatch");
    std::vector<CoverUpdate> adds;
    std::vector<CoverUpdate> dels;
    for (std::size_t slot = 0; slot < prev.rects.size(); ++slot) {
        if (prev.rects[slot] == next.rects[slot]) continue;
        if (prev.rects[slot]) dels.push_back({UpdateKind::Delete, *prev.rects[slot], ids.current(slot), step});
        if (next.rects[slot]) adds.push_back({UpdateKind::Add, *next.rects[slot], ids.bump(slot), step});
    }
    adds.insert(adds.end(), dels.begin(), dels.end());
    return adds;
}

std::vector<std::pair<std::uint64_t, RankRect>> register_snapshot(const Snapshot& snap, RectVersions& ids) {
    std::vector<std::pair<std::uint64_t, RankRect>> out;
    for (std::size_t slot = 0; slot < snap.rects.size(); ++slot) {
        if (snap.rects[slot]) out.emplace_back(ids.bump(slot), *snap.rects[slot]);
    }
    return out;
}

RankSweep::RankSweep(const CoordSets& cs, const Rational& start_lambda)
    : cs_(cs),
      x_(rank_order(cs.x, start_lambda)),
      y_(rank_order(cs.y, start_lambda)),
      snapshot_(snapshot_from_orders(cs, x_, y_)),
      is_dirty_(cs.slot_count(), 0) {}

void RankSweep::mark_block(const Block& b) {
    const RankOrder& ro = order(b.axis);
    const auto& refs = cs_.refs(b.axis);
    for (std::uint32_t p = b.lo; p <= b.hi; ++p) {
        const std::size_t slot = refs[ro.order[p]].slot;
        if (!is_dirty_[slot]) {
            is_dirty_[slot] = 1;
            dirty_.push_back(slot);
        }
    }
}

std::vector<CoverUpdate> RankSweep::flush(RectVersions& ids, std::size_t step) {
    std::sort(dirty_.begin(), dirty_.end());
    std::vector<CoverUpdate> adds;
    std::vector<CoverUpdate> dels;
    for (std::size_t slot : dirty_) {
        is_dirty_[slot] = 0;
        auto next = slot_rect(cs_, slot, x_, y_, snapshot_.nx, snapshot_.ny);
        auto& cur = snapshot_.rects[slot];
        if (cur == next) continue;
        if (cur) dels.push_back({UpdateKind::Delete, *cur, ids.current(slot), step});
        if (next) adds.push_back({UpdateKind::Add, *next, ids.bump(slot), step});
        cur = next;
    }
    dirty_.clear();
    adds.insert(adds.end(), dels.begin(), dels.end());
    return adds;
}

std::vector<CoverUpdate> RankSweep::enter(const CriticalEvent& event, RectVersions& ids, std::size_t step) {
    if (!pending_.empty()) throw Error("InternalError", "enter called twice without leave");
    for (Axis axis : {Axis::X, Axis::Y}) {
        std::vector<std::uint32_t> involved;
        for (const Crossing& c : event.crossings) {
            if (c.axis != axis) continue;
            involved.push_back(c.f);
            involved.push_back(c.g);
        }
        if (involved.empty()) continue;
        std::sort(involved.begin(), involved.end());
        involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
        const auto& forms = cs_.forms(axis);
        std::vector<std::pair<Rational, std::uint32_t>> vals;
        vals.reserve(involved.size());
        for (std::uint32_t f : involved) vals.emplace_back(forms[f].at(event.lambda), f);
        std::sort(vals.begin(), vals.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        RankOrder& ro = order_mut(axis);
        std::size_t s = 0;
        while (s < vals.size()) {
            std::size_t t = s;
            std::uint32_t lo_pos = ro.pos[vals[s].second];
            std::uint32_t hi_pos = lo_pos;
            while (t < vals.size() && vals[t].first == vals[s].first) {
                lo_pos = std::min(lo_pos, ro.pos[vals[t].second]);
                hi_pos = std::max(hi_pos, ro.pos[vals[t].second]);
                ++t;
            }
            const Block b{axis, ro.group_lo[lo_pos], ro.group_hi[hi_pos]};
            for (std::uint32_t p = b.lo; p <= b.hi; ++p) {
                ro.group_lo[p] = b.lo;
                ro.group_hi[p] = b.hi;
            }
            pending_.push_back(b);
            mark_block(b);
            s = t;
        }
    }
    return flush(ids, step);
}

std::vector<CoverUpdate> RankSweep::leave(RectVersions& ids, std::size_t step) {
    for (const Block& b : pending_) {
        RankOrder& ro = order_mut(b.axis);
        const auto& forms = cs_.forms(b.axis);
        auto first = ro.order.begin() + b.lo;
        auto last = ro.order.begin() + b.hi + 1;
        // Just below the event, larger slope means smaller value.
        std::sort(first, last, [&](std::uint32_t f, std::uint32_t g) {
            const auto c = forms[f].alpha <=> forms[g].alpha;
            return c != 0 ? c > 0 : f < g;
        });
        std::uint32_t start = b.lo;
        for (std::uint32_t p = b.lo; p <= b.hi; ++p) {
            ro.pos[ro.order[p]] = p;
            if (p == b.hi || forms[ro.order[p + 1]].alpha != forms[ro.order[p]].alpha) {
                for (std::uint32_t q = start; q <= p; ++q) {
                    ro.group_lo[q] = start;
                    ro.group_hi[q] = p;
                }
                start = p + 1;
            }
        }
        mark_block(b);
    }
    pending_.clear();
    return flush(ids, step);
}

}  // namespace polyplace
