#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vmplace/classifier.hpp"
#include "vmplace/errors.hpp"
#include "vmplace/incremental_placement.hpp"
#include "vmplace/initial_placement.hpp"
#include "vmplace/model.hpp"

namespace vmplace {

enum class EventKind {
    Place,
    SpikeStart,
    SpikeEnd,
    Hotspot,
    Migrate,
    Unresolved,
};

std::string_view to_string(EventKind kind);

/// One simulation event. Ids that do not apply to the kind are -1; see
/// docs/event_log.md for the per-kind field set.
struct Event {
    std::int64_t tick = 0;
    EventKind kind = EventKind::Place;
    int vm_id = -1;
    int server_id = -1;
    int src_server_id = -1;
    int dst_server_id = -1;
    ResourceVector util;
};

/// Serializes one event as a single JSON line (the event-log format).
std::string to_json_line(const Event& event);

struct SimMetrics {
    std::int64_t hot_spot_events = 0;
    std::int64_t migrations = 0;
    std::int64_t unresolved_ticks = 0;
    /// Sum of the priorities of every VM hosted on an overloaded server,
    /// accumulated at each detection.
    std::int64_t priority_weighted_violation = 0;
    /// Mean actual-demand utilization across servers, one entry per tick.
    std::vector<ResourceVector> mean_utilization_series;
};

struct SimConfig {
    std::uint64_t seed = 1;
    double threshold = 1.0;
    bool mitigation = true;
    EvictionOrder eviction_order = EvictionOrder::LowPriorityFirst;
    ClassifierConfig classifier;
};

/// Raised when initial placement leaves VMs unplaced and the scenario
/// does not allow running without them.
class UnplacedError : public Error {
public:
    UnplacedError(std::string message, InitialPlacementReport report)
        : Error(std::move(message)), report(std::move(report)) {}
    InitialPlacementReport report;
};

/// Discrete-time loop over a placed cluster: regenerate actual demands,
/// detect hot spots, mitigate via the incremental placer, accumulate
/// metrics. Fully deterministic in (state, catalog, config).
class SimulationEngine {
public:
    /// `vms` dominant sets are resolved against the classifier config on
    /// construction, so the workload model sees every VM's final set.
    SimulationEngine(ClusterState state, const VmCatalog& vms, SimConfig cfg);

    void step();
    void run_ticks(std::int64_t count);

    std::int64_t current_tick() const { return tick_; }
    const SimMetrics& metrics() const { return metrics_; }
    const std::vector<Event>& events() const { return events_; }
    std::vector<Event> take_events() { return std::move(events_); }
    const ClusterState& state() const { return state_; }
    const VmCatalog& vms() const { return vms_; }

private:
    ClusterState state_;
    VmCatalog vms_;
    SimConfig cfg_;
    std::int64_t tick_ = 0;
    SimMetrics metrics_;
    std::vector<Event> events_;
    std::unordered_map<int, bool> spike_state_;
};

}  // namespace vmplace
