#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace polyplace {

// Segment tree over the elementary intervals of a sorted coordinate list.
// Each node keeps how many inserted intervals cover it exactly (cnt) and the
// covered length of its subtree; intervals are only ever removed after being
// inserted, so no push-down is needed.
template <class T>
class CoverLengthTree {
public:
    CoverLengthTree() = default;

    // coords: strictly increasing breakpoints; elementary interval i is
    // [coords[i], coords[i+1]).
    explicit CoverLengthTree(std::vector<T> coords) : coords_(std::move(coords)) {
        leaves_ = coords_.size() > 1 ? coords_.size() - 1 : 0;
        if (leaves_ == 0) return;
        cnt_.assign(4 * leaves_, 0);
        len_.assign(4 * leaves_, T{});
        full_.assign(4 * leaves_, T{});
        build(1, 0, leaves_);
    }

    [[nodiscard]] std::size_t leaves() const { return leaves_; }
    [[nodiscard]] const std::vector<T>& coords() const { return coords_; }

    // Index of the breakpoint equal to (or first above) value.
    [[nodiscard]] std::size_t index_of(const T& value) const {
        return static_cast<std::size_t>(std::lower_bound(coords_.begin(), coords_.end(), value) -
                                        coords_.begin());
    }

    // Adds delta to elementary intervals [lo, hi).
    void add(std::size_t lo, std::size_t hi, int delta) {
        if (lo >= hi || leaves_ == 0) return;
        update(1, 0, leaves_, lo, hi, delta);
    }

    [[nodiscard]] T covered() const { return leaves_ == 0 ? T{} : len_[1]; }
    [[nodiscard]] T total() const { return leaves_ == 0 ? T{} : full_[1]; }

    // Leftmost elementary interval with zero coverage.
    [[nodiscard]] std::optional<std::size_t> first_uncovered() const {
        if (leaves_ == 0 || !(len_[1] < full_[1])) return std::nullopt;
        std::size_t node = 1;
        std::size_t nl = 0;
        std::size_t nr = leaves_;
        while (nr - nl > 1) {
            const std::size_t mid = (nl + nr) / 2;
            const std::size_t left = 2 * node;
            if (cnt_[left] == 0 && len_[left] < full_[left]) {
                node = left;
                nr = mid;
            } else {
                node = left + 1;
                nl = mid;
            }
        }
        return nl;
    }

private:
    void build(std::size_t node, std::size_t nl, std::size_t nr) {
        if (nr - nl == 1) {
            full_[node] = coords_[nr] - coords_[nl];
            return;
        }
        const std::size_t mid = (nl + nr) / 2;
        build(2 * node, nl, mid);
        build(2 * node + 1, mid, nr);
        full_[node] = full_[2 * node] + full_[2 * node + 1];
    }

    void pull(std::size_t node, std::size_t nl, std::size_t nr) {
        if (cnt_[node] > 0) {
            len_[node] = full_[node];
        } else if (nr - nl == 1) {
            len_[node] = T{};
        } else {
            len_[node] = len_[2 * node] + len_[2 * node + 1];
        }
    }

    void update(std::size_t node, std::size_t nl, std::size_t nr, std::size_t lo, std::size_t hi,
                int delta) {
        if (hi <= nl || nr <= lo) return;
        if (lo <= nl && nr <= hi) {
            cnt_[node] += delta;
            assert(cnt_[node] >= 0);
            pull(node, nl, nr);
            return;
        }
        const std::size_t mid = (nl + nr) / 2;
        update(2 * node, nl, mid, lo, hi, delta);
        update(2 * node + 1, mid, nr, lo, hi, delta);
        pull(node, nl, nr);
    }

    std::vector<T> coords_;
    std::size_t leaves_ = 0;
    std::vector<int> cnt_;
    std::vector<T> len_;
    std::vector<T> full_;
};

}  // namespace polyplace
