#pragma once

#include <cstdint>
#include <vector>

#include "vmplace/scenario.hpp"

namespace vmplace {

struct MetricStats {
    double mean = 0.0;
    /// Sample standard deviation (n-1); 0 for a single seed.
    double stddev = 0.0;
    std::vector<double> per_seed;
};

struct ComparisonRow {
    PlacerKind placer = PlacerKind::Graybox;
    MetricStats hot_spot_events;
    MetricStats migrations;
    MetricStats unresolved_ticks;
    MetricStats priority_weighted_violation;
};

struct ComparisonTable {
    std::vector<std::uint64_t> seeds;
    std::vector<ComparisonRow> rows;
};

/// Runs the scenario once per (placer, seed) pair and aggregates the
/// metric counters per placer. Requires at least two placers and one
/// seed. `jobs` bounds the worker threads; results are merged in
/// (placer, seed) order regardless of scheduling.
ComparisonTable compare_placers(const Scenario& scenario, const std::vector<PlacerKind>& placers,
                                const std::vector<std::uint64_t>& seeds, unsigned jobs = 1);

}  // namespace vmplace
