#include "polyplace/hardness.hpp"

#include <algorithm>
#include <set>

#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

struct Column {
    Rational width;
    Rational height;
};

// Polygon over the x-axis whose top boundary is a sequence of columns.
OrthoPolygon skyline(const Rational& x0, const std::vector<Column>& cols) {
    std::vector<std::pair<Rational, Rational>> runs;  // (x_left, height), merged
    Rational x = x0;
    for (const Column& c : cols) {
        if (runs.empty() || runs.back().second != c.height) runs.emplace_back(x, c.height);
        x = x + c.width;
    }
    std::vector<Point> v{{x0, Rational(0)}, {x, Rational(0)}};
    for (std::size_t k = runs.size(); k-- > 0;) {
        const Rational right = k + 1 < runs.size() ? runs[k + 1].first : x;
        v.push_back({right, runs[k].second});
        v.push_back({runs[k].first, runs[k].second});
    }
    return validate_polygon(v);
}

using Intervals = std::vector<std::pair<Rational, Rational>>;

// Square [-h, h]^2 with outward prongs of depth `len` over the given
// intervals of each side (absolute coordinates along the side).
OrthoPolygon pronged_square(const Rational& h, const Rational& len, Intervals bottom, Intervals right, Intervals top,
                            Intervals left) {
    for (Intervals* s : {&bottom, &right, &top, &left}) std::sort(s->begin(), s->end());
    const Rational out = h + len;
    std::vector<Point> v;
    v.push_back({-h, -h});
    for (const auto& [lo, hi] : bottom) {
        v.insert(v.end(), {{lo, -h}, {lo, -out}, {hi, -out}, {hi, -h}});
    }
    v.push_back({h, -h});
    for (const auto& [lo, hi] : right) {
        v.insert(v.end(), {{h, lo}, {out, lo}, {out, hi}, {h, hi}});
    }
    v.push_back({h, h});
    for (auto it = top.rbegin(); it != top.rend(); ++it) {
        v.insert(v.end(), {{it->second, h}, {it->second, out}, {it->first, out}, {it->first, h}});
    }
    v.push_back({-h, h});
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        v.insert(v.end(), {{-h, it->second}, {-out, it->second}, {-out, it->first}, {-h, it->first}});
    }
    return validate_polygon(v);
}

void check_universe(const std::vector<std::int64_t>& s, std::int64_t u, const char* name) {
    for (std::int64_t v : s) {
        if (v < -u || v > u) {
            throw Error("OutOfUniverse", std::string(name) + " contains " + std::to_string(v) + " outside [-" +
                                             std::to_string(u) + ", " + std::to_string(u) + "]");
        }
    }
}

std::vector<std::int64_t> sorted_unique(const std::vector<std::int64_t>& s) {
    std::vector<std::int64_t> out(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Intervals gadget(const std::vector<std::int64_t>& s, const Rational& center, const Rational& delta) {
    Intervals out;
    for (std::int64_t v : sorted_unique(s)) out.emplace_back(center + Rational(v) - delta, center + Rational(v) + delta);
    return out;
}

std::int64_t max_abs(std::initializer_list<const std::vector<std::int64_t>*> sets) {
    std::int64_t m = 1;
    for (const auto* s : sets) {
        for (std::int64_t v : *s) m = std::max(m, v < 0 ? -v : v);
    }
    return m;
}

template <class T>
const T& inputs_as(const HardInstance& inst, const char* what) {
    if (const T* p = std::get_if<T>(&inst.inputs)) return *p;
    throw Error("InvalidInput", std::string("instance is not a ") + what + " instance");
}

}  // namespace

std::string to_string(HardMode mode) {
    switch (mode) {
        case HardMode::FixedTranslation: return "fixed-translation";
        case HardMode::ScaleXTranslation: return "scale-x-translation";
        case HardMode::ScaleTranslation: return "scale-translation";
    }
    return "unknown";
}

std::string to_string(HardKind kind) {
    switch (kind) {
        case HardKind::Ov: return "ov";
        case HardKind::Average: return "average";
        case HardKind::FourSum: return "foursum";
    }
    return "unknown";
}

HardKind parse_hard_kind(const std::string& s) {
    if (s == "ov") return HardKind::Ov;
    if (s == "average" || s == "3sum") return HardKind::Average;
    if (s == "foursum" || s == "4sum") return HardKind::FourSum;
    throw Error("InvalidInput", "unknown instance kind '" + s + "'");
}

HardInstance gen_ov(const std::vector<BitVector>& a, const std::vector<BitVector>& b) {
    if (a.empty() || b.empty()) throw Error("InvalidInput", "vector sets must be nonempty");
    const std::size_t d = a.front().size();
    if (d == 0) throw Error("InvalidInput", "dimension must be at least 1");
    for (const auto* set : {&a, &b}) {
        for (const BitVector& v : *set) {
            if (v.size() != d) throw Error("InvalidInput", "vectors must share one dimension");
            for (int bit : v) {
                if (bit != 0 && bit != 1) throw Error("NonBinaryVector", "entry " + std::to_string(bit) + " is not 0 or 1");
            }
        }
    }
    const Rational one(1);
    const Rational three(3);
    const Rational delta(static_cast<std::int64_t>((a.size() - 1) * (d + 1) + 1));

    std::vector<Column> pc{{one, three}};
    for (const BitVector& v : a) {
        for (int bit : v) pc.push_back({one, Rational(1 + bit)});
        pc.push_back({one, three});
    }
    std::vector<Column> qc{{delta, three}};
    for (const BitVector& v : b) {
        for (int bit : v) qc.push_back({one, Rational(2 - bit)});
        qc.push_back({delta, three});
    }
    HardInstance inst{skyline(Rational(0), pc), skyline(Rational(0), qc), HardMode::FixedTranslation, Rational(1),
                      {}, OvInputs{a, b}};
    inst.params.Delta = delta;
    inst.params.d = static_cast<std::int64_t>(d);
    return inst;
}

HardInstance gen_average(const std::vector<std::int64_t>& a, std::optional<std::int64_t> universe) {
    if (a.empty()) throw Error("InvalidInput", "the set must be nonempty");
    if (sorted_unique(a).size() != a.size()) throw Error("DuplicateElement", "set elements must be distinct");
    const auto n = static_cast<std::int64_t>(a.size());
    const std::int64_t u = universe.value_or(n * n * n);
    if (u < 1) throw Error("InvalidInput", "universe bound must be positive");
    check_universe(a, u, "A");

    GenParams g;
    g.U = Rational(u);
    g.L = Rational(2 * u);
    g.eps = Rational(1, 10 * u);
    g.Lprime = g.U * g.L;
    g.delta = g.U * g.eps;

    // P_0 = [-1-eps, 1+eps] x [0, 1] with prongs of length L rising at -1, 0, 1
    const Rational one(1);
    const Rational w = 2 * g.eps;
    const Rational gap = one - w;
    const Rational tall = one + g.L;
    std::vector<Column> pc{{w, tall}, {gap, one}, {w, tall}, {gap, one}, {w, tall}};

    // Q_0 = [-U-delta, U+delta] x [0, U]; element v owns [v-delta, v+delta]
    const std::set<std::int64_t> members(a.begin(), a.end());
    const Rational qw = 2 * g.delta;
    const Rational qgap = one - qw;
    std::vector<Column> qc;
    for (std::int64_t v = -u; v <= u; ++v) {
        qc.push_back({qw, members.count(v) ? g.U + g.Lprime : g.U});
        if (v < u) qc.push_back({qgap, g.U});
    }
    return {skyline(-one - g.eps, pc), skyline(-g.U - g.delta, qc), HardMode::ScaleXTranslation, one, g,
            AverageInputs{a}};
}

HardInstance gen_foursum(const std::vector<std::int64_t>& a1, const std::vector<std::int64_t>& a2,
                         const std::vector<std::int64_t>& b1, const std::vector<std::int64_t>& b2,
                         std::optional<std::int64_t> universe) {
    if (a1.empty() || a2.empty() || b1.empty() || b2.empty()) throw Error("InvalidInput", "sets must be nonempty");
    const std::int64_t u = universe.value_or(max_abs({&a1, &a2, &b1, &b2}));
    if (u < 1) throw Error("InvalidInput", "universe bound must be positive");
    check_universe(a1, u, "A1");
    check_universe(a2, u, "A2");
    check_universe(b1, u, "B1");
    check_universe(b2, u, "B2");

    GenParams g;
    g.U = Rational(u);
    g.M = Rational(1000) * g.U * g.U;
    g.L = Rational(50);
    g.eps = Rational(1) / (Rational(800) * g.M);
    g.delta = Rational(1, 400);
    g.Lprime = Rational(2) * g.M * g.L;

    // Prongs of P: bottom at x = 0, right at y = 1, top at x = 1, left at y = 0.
    const Rational one(1);
    const Intervals at0{{-g.eps, g.eps}};
    const Intervals at1{{one - g.eps, one + g.eps}};
    OrthoPolygon p = pronged_square(Rational(2), g.L, at0, at1, at1, at0);

    // Gadgets of Q: S(A1) bottom around x = 0, S(B2) right around y = M,
    // S(A2) top around x = M, S(B1) left around y = 0.
    const Rational zero(0);
    OrthoPolygon q = pronged_square(Rational(5) * g.M, g.Lprime, gadget(a1, zero, g.delta), gadget(b2, g.M, g.delta),
                                    gadget(a2, g.M, g.delta), gadget(b1, zero, g.delta));
    Rational threshold = g.M - Rational(2) * g.U;
    return {std::move(p), std::move(q), HardMode::ScaleTranslation, std::move(threshold), g,
            FourSumInputs{a1, a2, b1, b2}};
}

bool brute_solve(const HardInputs& inputs) {
    struct Visitor {
        bool operator()(const OvInputs& in) const {
            return std::any_of(in.a.begin(), in.a.end(), [&](const BitVector& x) {
                return std::any_of(in.b.begin(), in.b.end(), [&](const BitVector& y) {
                    for (std::size_t k = 0; k < x.size(); ++k) {
                        if (x[k] == 1 && y[k] == 1) return false;
                    }
                    return true;
                });
            });
        }
        bool operator()(const AverageInputs& in) const {
            const std::vector<std::int64_t> s = sorted_unique(in.a);
            const std::set<std::int64_t> members(s.begin(), s.end());
            for (std::size_t i = 0; i < s.size(); ++i) {
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    if (members.count(2 * s[j] - s[i])) return true;
                }
            }
            return false;
        }
        bool operator()(const FourSumInputs& in) const {
            std::set<std::int64_t> diffs;
            for (std::int64_t x1 : in.a1) {
                for (std::int64_t x2 : in.a2) diffs.insert(x2 - x1);
            }
            for (std::int64_t y1 : in.b1) {
                for (std::int64_t y2 : in.b2) {
                    if (diffs.count(y2 - y1)) return true;
                }
            }
            return false;
        }
    };
    return std::visit(Visitor{}, inputs);
}

Placement ov_witness(const HardInstance& inst, std::size_t i, std::size_t j) {
    const OvInputs& in = inputs_as<OvInputs>(inst, "OV");
    if (i >= in.a.size() || j >= in.b.size()) throw Error("InvalidInput", "vector index out of range");
    const auto d = inst.params.d;
    const Rational p_start(static_cast<std::int64_t>(1 + i * static_cast<std::size_t>(d + 1)));
    const Rational q_start = inst.params.Delta + Rational(static_cast<std::int64_t>(j)) * (Rational(d) + inst.params.Delta);
    return {Rational(1), {q_start - p_start, Rational(0)}};
}

Placement average_witness(const HardInstance& inst, std::int64_t a1, std::int64_t a2) {
    inputs_as<AverageInputs>(inst, "Average");
    if (a2 <= a1) throw Error("InvalidInput", "progression must be increasing");
    // centers: x = 0 (middle prong), y = (1 + L) / 2; keep the bottom on y = 0
    const Rational lambda(a2 - a1);
    const Rational cy = (Rational(1) + inst.params.L) / 2;
    return {lambda, {Rational(a2), (lambda - Rational(1)) * cy}};
}

Placement foursum_witness(const HardInstance& inst, std::int64_t a1, std::int64_t a2, std::int64_t b1) {
    inputs_as<FourSumInputs>(inst, "4SUM");
    return {inst.params.M + Rational(a2 - a1), {Rational(a1), Rational(b1)}};
}

}  // namespace polyplace
