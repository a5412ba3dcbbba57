#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyplace/geometry.hpp"

namespace polyplace {

// Polygon instances encoding orthogonal vectors, 3-term progressions
// (Average) and 4SUM, with brute-force deciders for cross-checking.

enum class HardMode { FixedTranslation, ScaleXTranslation, ScaleTranslation };
enum class HardKind { Ov, Average, FourSum };

std::string to_string(HardMode mode);
std::string to_string(HardKind kind);
HardKind parse_hard_kind(const std::string& s);

// Parameters of a construction; fields that a kind does not use stay zero.
struct GenParams {
    Rational U;
    Rational L;
    Rational Lprime;
    Rational eps;
    Rational delta;
    Rational M;
    Rational Delta;
    std::int64_t d = 0;
};

using BitVector = std::vector<int>;

struct OvInputs {
    std::vector<BitVector> a;
    std::vector<BitVector> b;
};

struct AverageInputs {
    std::vector<std::int64_t> a;
};

struct FourSumInputs {
    std::vector<std::int64_t> a1;
    std::vector<std::int64_t> a2;
    std::vector<std::int64_t> b1;
    std::vector<std::int64_t> b2;
};

using HardInputs = std::variant<OvInputs, AverageInputs, FourSumInputs>;

struct HardInstance {
    OrthoPolygon p;
    OrthoPolygon q;
    HardMode mode = HardMode::FixedTranslation;
    Rational threshold;  // YES iff the best scale reaches it; unused for fixed translation
    GenParams params;
    HardInputs inputs;

    [[nodiscard]] HardKind kind() const { return static_cast<HardKind>(inputs.index()); }
};

// Throws NonBinaryVector for entries outside {0, 1} and InvalidInput for
// empty sets or mismatched dimensions.
HardInstance gen_ov(const std::vector<BitVector>& a, const std::vector<BitVector>& b);

// U defaults to n^3. Throws OutOfUniverse or DuplicateElement.
HardInstance gen_average(const std::vector<std::int64_t>& a, std::optional<std::int64_t> universe = std::nullopt);

// U defaults to max(1, max |v|); M = 1000 U^2. Throws OutOfUniverse.
HardInstance gen_foursum(const std::vector<std::int64_t>& a1, const std::vector<std::int64_t>& a2,
                         const std::vector<std::int64_t>& b1, const std::vector<std::int64_t>& b2,
                         std::optional<std::int64_t> universe = std::nullopt);

bool brute_solve(const HardInputs& inputs);

// Placements from the forward direction of each construction, for a chosen
// YES certificate. They use the transform() convention.
Placement ov_witness(const HardInstance& inst, std::size_t i, std::size_t j);
Placement average_witness(const HardInstance& inst, std::int64_t a1, std::int64_t a2);
Placement foursum_witness(const HardInstance& inst, std::int64_t a1, std::int64_t a2, std::int64_t b1);

}  // namespace polyplace
