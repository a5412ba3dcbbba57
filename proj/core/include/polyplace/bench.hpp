#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polyplace/geometry.hpp"

namespace polyplace {

enum class BenchSuite { Random, Generated };

BenchSuite parse_bench_suite(const std::string& s);

struct BenchInstance {
    OrthoPolygon p;
    OrthoPolygon q;
};

// Random: random polygons with up to `size` vertices each. Generated: a unit
// square against a staircase corridor with `size` vertices (size / 4 steps).
BenchInstance make_bench_instance(BenchSuite suite, std::size_t size, std::mt19937_64& rng);

struct BenchRow {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t criticals = 0;
    std::size_t updates = 0;
    double t_fast_ms = 0;
    double t_base_ms = 0;
    bool agree = true;
};

// Times max_scale and max_scale_baseline on one instance, best of `repeats`.
BenchRow run_bench_case(const BenchInstance& inst, int repeats = 1);

std::string bench_csv(const std::vector<BenchRow>& rows);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace polyplace
