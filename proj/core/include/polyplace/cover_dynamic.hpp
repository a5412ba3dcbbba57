#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "polyplace/forbidden.hpp"
#include "polyplace/rank_space.hpp"

namespace polyplace {

// Offline dynamic rectangle cover problem over the cell box [1, nx] x [1, ny].
// `initial` rectangles are live before the first update and are not updates
// themselves.
struct TraceProblem {
    std::size_t n = 1;  // live rectangles never exceed 2n
    std::int64_t nx = 1;
    std::int64_t ny = 1;
    std::vector<std::pair<std::uint64_t, RankRect>> initial;
    std::vector<CoverUpdate> updates;

    [[nodiscard]] RankRect box() const { return {1, nx, 1, ny}; }
    [[nodiscard]] std::int64_t total_cells() const { return nx * ny; }
};

enum class CoverImpl { Naive, OvermarsYap };

// Throws MalformedTrace on deletes of dead ids, re-adds of live ids, invalid
// or out-of-box rectangles, or more than 2n live rectangles.
void validate_trace(const TraceProblem& tp);

// 1-based index of the first update after which the box is not fully covered.
std::optional<std::size_t> first_uncover(const TraceProblem& tp, CoverImpl impl);

// Covered cell count after each update.
std::vector<std::int64_t> area_after_each(const TraceProblem& tp, CoverImpl impl);

// Trace text format: a header `N <nx> <ny>`, then one event per line:
// `I <id> <x_lo> <x_hi> <y_lo> <y_hi>` (initially live), `A <id> ...` (add)
// or `D <id>` (delete). n is the largest live count reached.
TraceProblem read_trace(std::istream& in);
void write_trace(std::ostream& out, const TraceProblem& tp);

}  // namespace polyplace
