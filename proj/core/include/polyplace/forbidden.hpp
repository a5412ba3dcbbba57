#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyplace/cover_static.hpp"
#include "polyplace/decompose.hpp"
#include "polyplace/geometry.hpp"
#include "polyplace/rank_space.hpp"

namespace polyplace {

// lambda -> alpha * lambda + beta
struct LinearForm {
    Rational alpha;
    Rational beta;

    [[nodiscard]] Rational at(const Rational& lambda) const { return alpha * lambda + beta; }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Open rectangle (a, b) x (c, d) of translations, each side linear in lambda.
// src is the (interior cover, complement cover) index pair it came from.
struct LinearRect {
    LinearForm a;
    LinearForm b;
    LinearForm c;
    LinearForm d;
    std::pair<std::size_t, std::size_t> src{0, 0};

    [[nodiscard]] OpenRect at(const Rational& lambda) const {
        return {a.at(lambda), b.at(lambda), c.at(lambda), d.at(lambda)};
    }
    [[nodiscard]] bool empty_at(const Rational& lambda) const { return at(lambda).empty(); }
    [[nodiscard]] bool contains(const Point& tau, const Rational& lambda) const {
        return at(lambda).contains(tau);
    }
};

// Translations tau for which lambda * p_i + tau overlaps the interior of q_j.
// p_i is expressed relative to center, the scaling reference point of P.
LinearRect forbidden_rect(const AxisRect& p_i, const AxisRect& q_j, const Point& center = {});

enum class Axis : std::uint8_t { X, Y };
enum class Side : std::uint8_t { A, B, C, D, BoxX0, BoxX1, BoxY0, BoxY1 };

// Which rank-space rectangle a coordinate function belongs to. Slots
// [0, K) are the forbidden rectangles, K..K+3 are C_L, C_R, C_B, C_T.
struct FormRef {
    std::size_t slot;
    Side side;
};

// The x- and y-coordinate functions of every forbidden rectangle plus the
// bounding box B. Layout: x[2k] = a_k, x[2k+1] = b_k, x[2K] = x0^B,
// x[2K+1] = x1^B (y likewise with c, d, y0^B, y1^B).
struct CoordSets {
    std::vector<LinearRect> rects;
    std::vector<LinearForm> x;
    std::vector<LinearForm> y;
    std::vector<FormRef> x_refs;
    std::vector<FormRef> y_refs;
    AxisRect box;

    [[nodiscard]] std::size_t rect_count() const { return rects.size(); }
    [[nodiscard]] std::size_t slot_count() const { return rects.size() + 4; }
    [[nodiscard]] const std::vector<LinearForm>& forms(Axis axis) const { return axis == Axis::X ? x : y; }
    [[nodiscard]] const std::vector<FormRef>& refs(Axis axis) const { return axis == Axis::X ? x_refs : y_refs; }
    // Inverse of the back-references.
    [[nodiscard]] const LinearForm& side_form(std::size_t slot, Side side) const;
};

inline constexpr std::size_t kSlotLeft = 0;
inline constexpr std::size_t kSlotRight = 1;
inline constexpr std::size_t kSlotBottom = 2;
inline constexpr std::size_t kSlotTop = 3;

CoordSets coordinate_functions(const RectCover& pcov, const RectCover& qcov, const AxisRect& box);

struct Crossing {
    Axis axis;
    std::uint32_t f;
    std::uint32_t g;
};

// One critical value and every pair of forms meeting there.
struct CriticalEvent {
    Rational lambda;
    std::vector<Crossing> crossings;
};

// All positive lambda where two forms of the same axis meet, strictly
// descending. Parallel and identical forms never produce an event.
std::vector<CriticalEvent> critical_events(std::span<const LinearForm> xs, std::span<const LinearForm> ys);
std::vector<CriticalEvent> critical_events(const CoordSets& cs);
std::vector<Rational> critical_values(std::span<const LinearForm> xs, std::span<const LinearForm> ys);
std::vector<Rational> critical_values(const CoordSets& cs);

// Sorted order of one axis' forms at some lambda; ties share a rank interval.
struct RankOrder {
    std::vector<std::uint32_t> order;     // position -> form
    std::vector<std::uint32_t> pos;       // form -> position
    std::vector<std::uint32_t> group_lo;  // position -> first position of its tie group
    std::vector<std::uint32_t> group_hi;  // position -> last position of its tie group

    // 1-based rank interval of form f.
    [[nodiscard]] std::int64_t min_rank(std::uint32_t f) const { return group_lo[pos[f]] + 1; }
    [[nodiscard]] std::int64_t max_rank(std::uint32_t f) const { return group_hi[pos[f]] + 1; }
};

RankOrder rank_order(std::span<const LinearForm> forms, const Rational& lambda);

// Closed rank representation of all forbidden rectangles (nullopt where the
// real rectangle is empty) followed by C_L, C_R, C_B, C_T.
struct Snapshot {
    std::int64_t nx = 0;  // 2|X|
    std::int64_t ny = 0;  // 2|Y|
    std::vector<std::optional<RankRect>> rects;

    [[nodiscard]] RankRect box() const { return {1, nx, 1, ny}; }
    [[nodiscard]] std::vector<RankRect> live() const;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot rank_snapshot(const CoordSets& cs, const Rational& lambda);
Snapshot snapshot_from_orders(const CoordSets& cs, const RankOrder& xo, const RankOrder& yo);

// Evaluation point for the open region just above critical index i of a
// descending list: the midpoint to the next larger critical, or lambda_0 + 1.
Rational region_sample_above(std::span<const Rational> descending, std::size_t i);

// Real coordinate represented by rank-space cell k given the axis' sorted
// values (with multiplicity): a value shared by a tie group, or the midpoint
// of the gap next to a tie group's first or last rank.
Rational rank_cell_value(std::span<const Rational> sorted_values, std::int64_t k);
Point rank_cell_point(const CoordSets& cs, const Rational& lambda, const Cell& cell);

enum class UpdateKind : std::uint8_t { Add, Delete };

struct CoverUpdate {
    UpdateKind kind = UpdateKind::Add;
    RankRect rect;  // meaningful for adds
    std::uint64_t id = 0;
    std::size_t at_step = 0;

    friend bool operator==(const CoverUpdate&, const CoverUpdate&) = default;
};

// Rectangle identities: slot in the high 32 bits, version in the low 32.
class RectVersions {
public:
    explicit RectVersions(std::size_t slots) : version_(slots, 0) {}

    [[nodiscard]] std::uint64_t current(std::size_t slot) const { return make(slot, version_[slot]); }
    std::uint64_t bump(std::size_t slot) { return make(slot, ++version_[slot]); }

    static std::uint64_t make(std::size_t slot, std::uint32_t version) {
        return (static_cast<std::uint64_t>(slot) << 32) | version;
    }
    static std::size_t slot_of(std::uint64_t id) { return static_cast<std::size_t>(id >> 32); }

private:
    std::vector<std::uint32_t> version_;
};

// Adds for every slot whose rectangle appears or changes, then deletes for
// every slot whose previous rectangle disappears or changes.
std::vector<CoverUpdate> diff_snapshots(const Snapshot& prev, const Snapshot& next, RectVersions& ids,
                                        std::size_t step);

// Live rectangles of a snapshot as initial (id, rect) pairs; assigns versions.
std::vector<std::pair<std::uint64_t, RankRect>> register_snapshot(const Snapshot& snap, RectVersions& ids);

// Maintains the rank orders across a descending sweep of critical values,
// touching only the tie groups that change at each event.
class RankSweep {
public:
    // start_lambda must not be a critical value.
    RankSweep(const CoordSets& cs, const Rational& start_lambda);

    // Region just above the event -> {event.lambda}.
    std::vector<CoverUpdate> enter(const CriticalEvent& event, RectVersions& ids, std::size_t step);
    // {lambda_i} -> open region just below it.
    std::vector<CoverUpdate> leave(RectVersions& ids, std::size_t step);

    [[nodiscard]] const Snapshot& snapshot() const { return snapshot_; }
    [[nodiscard]] const RankOrder& order(Axis axis) const { return axis == Axis::X ? x_ : y_; }

private:
    struct Block {
        Axis axis;
        std::uint32_t lo;
        std::uint32_t hi;
    };

    RankOrder& order_mut(Axis axis) { return axis == Axis::X ? x_ : y_; }
    void mark_block(const Block& b);
    std::vector<CoverUpdate> flush(RectVersions& ids, std::size_t step);

    const CoordSets& cs_;
    RankOrder x_;
    RankOrder y_;
    Snapshot snapshot_;
    std::vector<Block> pending_;
    std::vector<std::size_t> dirty_;
    std::vector<char> is_dirty_;
};

}  // namespace polyplace
