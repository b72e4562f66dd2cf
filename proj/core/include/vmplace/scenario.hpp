#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vmplace/baselines.hpp"
#include "vmplace/classifier.hpp"
#include "vmplace/incremental_placement.hpp"
#include "vmplace/model.hpp"
#include "vmplace/oracle.hpp"
#include "vmplace/simulation.hpp"

namespace vmplace {

/// A fully materialized run description: servers, VM population,
/// classifier and workload settings, simulation horizon and seed.
/// Generator specs in the input file are expanded at parse time, so a
/// Scenario always carries explicit lists. docs/scenario_format.md
/// documents the file schema.
struct Scenario {
    std::uint64_t seed = 1;
    std::int64_t ticks = 100;
    double threshold = 1.0;
    bool mitigation = true;
    bool allow_unplaced = false;
    PlacerKind placer = PlacerKind::Graybox;
    EvictionOrder eviction_order = EvictionOrder::LowPriorityFirst;
    ClassifierConfig classifier;
    WorkloadModel workload_defaults;
    OracleLimits oracle_limits;
    std::vector<ServerState> servers;
    std::vector<VmSpec> vms;

    /// Human-readable notes for every default the parser filled in.
    /// Parse artifact; not serialized and not part of equivalence.
    std::vector<std::string> applied_defaults;
};

/// Parses and validates a scenario file (JSON, // comments allowed).
/// Errors carry the offending field and the violated bound.
Scenario parse_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& origin);

/// Canonical JSON with every field explicit; re-parsing yields an
/// equivalent scenario (dump(parse(dump(s))) == dump(s)).
std::string dump_scenario(const Scenario& scenario);

/// Bounds and consistency checks; parse_scenario runs this, call it
/// directly for programmatically built scenarios.
void validate_scenario(const Scenario& scenario);

SimConfig sim_config_of(const Scenario& scenario);

struct SimResult {
    InitialPlacementReport initial;
    SimMetrics metrics;
    std::vector<Event> events;
    Placement final_placement;
};

/// Initial placement with the configured placer, then `ticks` simulation
/// steps. Throws UnplacedError when placement leaves VMs behind and
/// allow_unplaced is off.
SimResult run_scenario(const Scenario& scenario);

}  // namespace vmplace
