#include "polyplace/cover_dynamic.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "polyplace/cover_static.hpp"
#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("MalformedTrace", what); }

// Half-open integer rectangle [x0, x1) x [y0, y1) of cells.
struct HRect {
    std::int64_t x0, x1, y0, y1;
};

HRect half_open(const RankRect& r) { return {r.x_lo, r.x_hi + 1, r.y_lo, r.y_hi + 1}; }

// Covered length over sorted breakpoints, counts only.
class CountTree {
public:
    CountTree() = default;
    explicit CountTree(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
        leaves_ = coords_.size() > 1 ? coords_.size() - 1 : 0;
        cnt_.assign(4 * leaves_, 0);
        len_.assign(4 * leaves_, 0);
    }

    [[nodiscard]] bool empty() const { return leaves_ == 0; }
    [[nodiscard]] std::int64_t covered() const { return leaves_ == 0 ? 0 : len_[1]; }

    void add(std::int64_t lo, std::int64_t hi, int delta) {
        const auto l = index_of(lo);
        const auto h = index_of(hi);
        if (l < h) update(1, 0, leaves_, l, h, delta);
    }

private:
    [[nodiscard]] std::size_t index_of(std::int64_t v) const {
        return static_cast<std::size_t>(std::lower_bound(coords_.begin(), coords_.end(), v) - coords_.begin());
    }

    void update(std::size_t node, std::size_t nl, std::size_t nr, std::size_t lo, std::size_t hi, int delta) {
        if (hi <= nl || nr <= lo) return;
        if (lo <= nl && nr <= hi) {
            cnt_[node] += delta;
        } else {
            const std::size_t mid = (nl + nr) / 2;
            update(2 * node, nl, mid, lo, hi, delta);
            update(2 * node + 1, mid, nr, lo, hi, delta);
        }
        if (cnt_[node] > 0) {
            len_[node] = coords_[nr] - coords_[nl];
        } else if (nr - nl == 1) {
            len_[node] = 0;
        } else {
            len_[node] = len_[2 * node] + len_[2 * node + 1];
        }
    }

    std::vector<std::int64_t> coords_;
    std::size_t leaves_ = 0;
    std::vector<std::int32_t> cnt_;
    std::vector<std::int64_t> len_;
};

std::size_t locate(const std::vector<std::int64_t>& v, std::int64_t x) {
    // index of the interval [v[i], v[i+1]) containing x
    return static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), x) - v.begin()) - 1;
}

// Overmars-Yap trellis structure over a fixed universe of rectangles. The
// x-axis is cut into about sqrt(m) slabs; inside a slab, rectangles with an
// x-edge strictly inside are partial and cut the slab into rows. In each
// cell partial rectangles are vertical strips and spanning rectangles are
// horizontal strips, so the cell's covered area is W*hy + H*vx - hy*vx.
class Trellis {
public:
    Trellis(const std::vector<HRect>& universe, std::int64_t nx, std::int64_t ny);

    void insert(std::size_t u, int delta);
    [[nodiscard]] std::int64_t covered() const { return total_; }

private:
    struct CellData {
        CountTree vx;  // vertical strips
        CountTree hy;  // horizontal strips
        std::int64_t area = 0;
    };

    struct Slab {
        std::int64_t x0 = 0;
        std::int64_t x1 = 0;
        std::vector<std::int64_t> rows;  // row boundaries
        std::vector<CellData> cells;
        std::vector<std::int32_t> cnt;   // segment tree over rows: full covers
        std::vector<std::int64_t> area;  // segment tree over rows: covered area
        std::int64_t root_area = 0;

        [[nodiscard]] std::size_t row_count() const { return rows.size() - 1; }
    };

    void cell_refresh(Slab& s, std::size_t row);
    void range_add(Slab& s, std::size_t node, std::size_t nl, std::size_t nr, std::size_t lo, std::size_t hi,
                   int delta);
    void leaf_refresh(Slab& s, std::size_t node, std::size_t nl, std::size_t nr, std::size_t pos);
    void pull(Slab& s, std::size_t node, std::size_t nl, std::size_t nr);
    void commit(Slab& s);

    std::vector<HRect> rects_;
    std::vector<std::int64_t> bounds_;  // slab boundaries
    std::vector<Slab> slabs_;
    std::int64_t total_ = 0;
};

Trellis::Trellis(const std::vector<HRect>& universe, std::int64_t nx, std::int64_t ny) : rects_(universe) {
    std::vector<std::int64_t> xs{1, nx + 1};
    for (const HRect& r : rects_) {
        xs.push_back(r.x0);
        xs.push_back(r.x1);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const auto step = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(xs.size())))));
    for (std::size_t i = 0; i < xs.size(); i += step) bounds_.push_back(xs[i]);
    if (bounds_.back() != xs.back()) bounds_.push_back(xs.back());

    const std::size_t ns = bounds_.size() - 1;
    slabs_.resize(ns);
    std::vector<std::vector<std::size_t>> partial(ns);
    std::vector<std::vector<std::size_t>> spanning(ns);
    for (std::size_t u = 0; u < rects_.size(); ++u) {
        const HRect& r = rects_[u];
        const std::size_t first = locate(bounds_, r.x0);
        const std::size_t last = locate(bounds_, r.x1 - 1);
        for (std::size_t j = first; j <= last; ++j) {
            if (r.x0 <= bounds_[j] && bounds_[j + 1] <= r.x1) {
                spanning[j].push_back(u);
            } else {
                partial[j].push_back(u);
            }
        }
    }
    for (std::size_t j = 0; j < ns; ++j) {
        Slab& s = slabs_[j];
        s.x0 = bounds_[j];
        s.x1 = bounds_[j + 1];
        s.rows = {1, ny + 1};
        for (std::size_t u : partial[j]) {
            s.rows.push_back(rects_[u].y0);
            s.rows.push_back(rects_[u].y1);
        }
        std::sort(s.rows.begin(), s.rows.end());
        s.rows.erase(std::unique(s.rows.begin(), s.rows.end()), s.rows.end());
        const std::size_t nr = s.row_count();
        std::vector<std::vector<std::int64_t>> xc(nr);
        std::vector<std::vector<std::int64_t>> yc(nr);
        for (std::size_t u : partial[j]) {
            const HRect& r = rects_[u];
            const std::int64_t a = std::max(r.x0, s.x0);
            const std::int64_t b = std::min(r.x1, s.x1);
            for (std::size_t row = locate(s.rows, r.y0); row < nr && s.rows[row] < r.y1; ++row) {
                xc[row].push_back(a);
                xc[row].push_back(b);
            }
        }
        for (std::size_t u : spanning[j]) {
            for (const std::int64_t y : {rects_[u].y0, rects_[u].y1}) {
                const std::size_t row = std::min(locate(s.rows, y), nr - 1);
                if (s.rows[row] < y && y < s.rows[row + 1]) yc[row].push_back(y);
            }
        }
        s.cells.resize(nr);
        for (std::size_t row = 0; row < nr; ++row) {
            if (!xc[row].empty()) {
                xc[row].push_back(s.x0);
                xc[row].push_back(s.x1);
                std::sort(xc[row].begin(), xc[row].end());
                xc[row].erase(std::unique(xc[row].begin(), xc[row].end()), xc[row].end());
                s.cells[row].vx = CountTree(std::move(xc[row]));
            }
            if (!yc[row].empty()) {
                yc[row].push_back(s.rows[row]);
                yc[row].push_back(s.rows[row + 1]);
                std::sort(yc[row].begin(), yc[row].end());
                yc[row].erase(std::unique(yc[row].begin(), yc[row].end()), yc[row].end());
                s.cells[row].hy = CountTree(std::move(yc[row]));
            }
        }
        s.cnt.assign(4 * nr, 0);
        s.area.assign(4 * nr, 0);
    }
}

void Trellis::pull(Slab& s, std::size_t node, std::size_t nl, std::size_t nr) {
    if (s.cnt[node] > 0) {
        s.area[node] = (s.x1 - s.x0) * (s.rows[nr] - s.rows[nl]);
    } else if (nr - nl == 1) {
        s.area[node] = s.cells[nl].area;
    } else {
        s.area[node] = s.area[2 * node] + s.area[2 * node + 1];
    }
}

void Trellis::range_add(Slab& s, std::size_t node, std::size_t nl, std::size_t nr, std::size_t lo, std::size_t hi,
                        int delta) {
    if (hi <= nl || nr <= lo) return;
    if (lo <= nl && nr <= hi) {
        s.cnt[node] += delta;
    } else {
        const std::size_t mid = (nl + nr) / 2;
        range_add(s, 2 * node, nl, mid, lo, hi, delta);
        range_add(s, 2 * node + 1, mid, nr, lo, hi, delta);
    }
    pull(s, node, nl, nr);
}

void Trellis::leaf_refresh(Slab& s, std::size_t node, std::size_t nl, std::size_t nr, std::size_t pos) {
    if (nr - nl > 1) {
        const std::size_t mid = (nl + nr) / 2;
        if (pos < mid) {
            leaf_refresh(s, 2 * node, nl, mid, pos);
        } else {
            leaf_refresh(s, 2 * node + 1, mid, nr, pos);
        }
    }
    pull(s, node, nl, nr);
}

void Trellis::cell_refresh(Slab& s, std::size_t row) {
    CellData& c = s.cells[row];
    const std::int64_t w = s.x1 - s.x0;
    const std::int64_t h = s.rows[row + 1] - s.rows[row];
    const std::int64_t vx = c.vx.covered();
    const std::int64_t hy = c.hy.covered();
    c.area = w * hy + h * vx - hy * vx;
    leaf_refresh(s, 1, 0, s.row_count(), row);
}

void Trellis::commit(Slab& s) {
    total_ -= s.root_area;
    s.root_area = s.area[1];
    total_ += s.root_area;
}

void Trellis::insert(std::size_t u, int delta) {
    const HRect& r = rects_[u];
    const std::size_t first = locate(bounds_, r.x0);
    const std::size_t last = locate(bounds_, r.x1 - 1);
    for (std::size_t j = first; j <= last; ++j) {
        Slab& s = slabs_[j];
        const std::size_t nr = s.row_count();
        if (r.x0 <= s.x0 && s.x1 <= r.x1) {
            const std::size_t lo_row = std::min(locate(s.rows, r.y0), nr - 1);
            const std::size_t hi_row = std::min(locate(s.rows, r.y1 - 1), nr - 1);
            const bool lo_partial = s.rows[lo_row] != r.y0;
            const bool hi_partial = s.rows[hi_row + 1] != r.y1;
            if (lo_row == hi_row && (lo_partial || hi_partial)) {
                s.cells[lo_row].hy.add(r.y0, r.y1, delta);
                cell_refresh(s, lo_row);
            } else {
                const std::size_t full_lo = lo_partial ? lo_row + 1 : lo_row;
                const std::size_t full_hi = hi_partial ? hi_row : hi_row + 1;
                if (full_lo < full_hi) range_add(s, 1, 0, nr, full_lo, full_hi, delta);
                if (lo_partial) {
                    s.cells[lo_row].hy.add(r.y0, s.rows[lo_row + 1], delta);
                    cell_refresh(s, lo_row);
                }
                if (hi_partial) {
                    s.cells[hi_row].hy.add(s.rows[hi_row], r.y1, delta);
                    cell_refresh(s, hi_row);
                }
            }
        } else {
            const std::int64_t a = std::max(r.x0, s.x0);
            const std::int64_t b = std::min(r.x1, s.x1);
            for (std::size_t row = locate(s.rows, r.y0); row < nr && s.rows[row] < r.y1; ++row) {
                s.cells[row].vx.add(a, b, delta);
                cell_refresh(s, row);
            }
        }
        commit(s);
    }
}

// Replays a validated trace, reporting the covered count after every update
// until `on_step` returns false.
template <class Fn>
void replay_naive(const TraceProblem& tp, Fn&& on_step) {
    std::unordered_map<std::uint64_t, RankRect> live;
    for (const auto& [id, r] : tp.initial) live.emplace(id, r);
    std::vector<RankRect> buf;
    for (const CoverUpdate& u : tp.updates) {
        if (u.kind == UpdateKind::Add) {
            live.emplace(u.id, u.rect);
        } else {
            live.erase(u.id);
        }
        buf.clear();
        for (const auto& kv : live) buf.push_back(kv.second);
        if (!on_step(union_area(buf, tp.box()))) return;
    }
}

template <class Fn>
void replay_trellis(const TraceProblem& tp, Fn&& on_step) {
    std::unordered_map<std::uint64_t, RankRect> live;
    for (const auto& [id, r] : tp.initial) live.emplace(id, r);
    const std::size_t batch = std::max<std::size_t>(tp.n, 1);
    for (std::size_t start = 0; start < tp.updates.size(); start += batch) {
        const std::size_t stop = std::min(tp.updates.size(), start + batch);
        // universe: live at batch start plus every rectangle added in the batch
        std::vector<HRect> universe;
        std::unordered_map<std::uint64_t, std::size_t> slot;
        for (const auto& [id, r] : live) {
            slot.emplace(id, universe.size());
            universe.push_back(half_open(r));
        }
        std::vector<std::size_t> add_slot(stop - start, 0);
        for (std::size_t i = start; i < stop; ++i) {
            if (tp.updates[i].kind == UpdateKind::Add) {
                add_slot[i - start] = universe.size();
                universe.push_back(half_open(tp.updates[i].rect));
            }
        }
        Trellis t(universe, tp.nx, tp.ny);
        for (const auto& kv : slot) t.insert(kv.second, +1);
        for (std::size_t i = start; i < stop; ++i) {
            const CoverUpdate& u = tp.updates[i];
            if (u.kind == UpdateKind::Add) {
                slot[u.id] = add_slot[i - start];
                live.emplace(u.id, u.rect);
                t.insert(add_slot[i - start], +1);
            } else {
                const auto it = slot.find(u.id);
                t.insert(it->second, -1);
                slot.erase(it);
                live.erase(u.id);
            }
            if (!on_step(t.covered())) return;
        }
    }
}

template <class Fn>
void replay(const TraceProblem& tp, CoverImpl impl, Fn&& on_step) {
    validate_trace(tp);
    if (impl == CoverImpl::Naive) {
        replay_naive(tp, on_step);
    } else {
        replay_trellis(tp, on_step);
    }
}

void check_rect(const TraceProblem& tp, std::uint64_t id, const RankRect& r) {
    if (!r.valid() || r.x_lo < 1 || r.y_lo < 1 || r.x_hi > tp.nx || r.y_hi > tp.ny) {
        malformed("rectangle " + std::to_string(id) + " is empty or outside the box");
    }
}

}  // namespace

void validate_trace(const TraceProblem& tp) {
    if (tp.nx < 1 || tp.ny < 1) malformed("box must be nonempty");
    const std::size_t cap = 2 * std::max<std::size_t>(tp.n, 1);
    std::unordered_set<std::uint64_t> live;
    for (const auto& [id, r] : tp.initial) {
        check_rect(tp, id, r);
        if (!live.insert(id).second) malformed("duplicate initial id " + std::to_string(id));
    }
    if (live.size() > cap) malformed("more than 2n live rectangles");
    for (std::size_t i = 0; i < tp.updates.size(); ++i) {
        const CoverUpdate& u = tp.updates[i];
        if (u.kind == UpdateKind::Add) {
            check_rect(tp, u.id, u.rect);
            if (!live.insert(u.id).second) malformed("update " + std::to_string(i + 1) + " re-adds live id");
            if (live.size() > cap) malformed("more than 2n live rectangles after update " + std::to_string(i + 1));
        } else if (live.erase(u.id) == 0) {
            malformed("update " + std::to_string(i + 1) + " deletes dead id " + std::to_string(u.id));
        }
    }
}

std::optional<std::size_t> first_uncover(const TraceProblem& tp, CoverImpl impl) {
    std::optional<std::size_t> found;
    std::size_t step = 0;
    const std::int64_t total = tp.total_cells();
    replay(tp, impl, [&](std::int64_t covered) {
        ++step;
        if (covered < total) {
            found = step;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<std::int64_t> area_after_each(const TraceProblem& tp, CoverImpl impl) {
    std::vector<std::int64_t> out;
    out.reserve(tp.updates.size());
    replay(tp, impl, [&](std::int64_t covered) {
        out.push_back(covered);
        return true;
    });
    return out;
}

TraceProblem read_trace(std::istream& in) {
    TraceProblem tp;
    std::string line;
    bool header = false;
    std::size_t live = 0;
    std::size_t peak = 0;
    std::size_t lineno = 0;
    const auto bad = [&](const std::string& what) {
        malformed("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "N") {
            if (header) bad("duplicate header");
            if (!(ls >> tp.nx >> tp.ny)) bad("expected N <nx> <ny>");
            header = true;
            continue;
        }
        if (!header) bad("missing N header");
        std::uint64_t id = 0;
        if (!(ls >> id)) bad("missing id");
        if (tag == "I" || tag == "A") {
            RankRect r;
            if (!(ls >> r.x_lo >> r.x_hi >> r.y_lo >> r.y_hi)) bad("expected four coordinates");
            if (tag == "I") {
                if (!tp.updates.empty()) bad("initial rectangles must precede updates");
                tp.initial.emplace_back(id, r);
            } else {
                tp.updates.push_back({UpdateKind::Add, r, id, tp.updates.size() + 1});
            }
            peak = std::max(peak, ++live);
        } else if (tag == "D") {
            tp.updates.push_back({UpdateKind::Delete, RankRect{}, id, tp.updates.size() + 1});
            if (live > 0) --live;
        } else {
            bad("unknown event '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) bad("trailing input");
    }
    if (!header) malformed("empty trace");
    tp.n = std::max<std::size_t>(peak, 1);
    validate_trace(tp);
    return tp;
}

void write_trace(std::ostream& out, const TraceProblem& tp) {
    out << "N " << tp.nx << ' ' << tp.ny << '\n';
    for (const auto& [id, r] : tp.initial) {
        out << "I " << id << ' ' << r.x_lo << ' ' << r.x_hi << ' ' << r.y_lo << ' ' << r.y_hi << '\n';
    }
    for (const CoverUpdate& u : tp.updates) {
        if (u.kind == UpdateKind::Add) {
            out << "A " << u.id << ' ' << u.rect.x_lo << ' ' << u.rect.x_hi << ' ' << u.rect.y_lo << ' '
                << u.rect.y_hi << '\n';
        } else {
            out << "D " << u.id << '\n';
        }
    }
}

}  // namespace polyplace
