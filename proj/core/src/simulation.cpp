#include "vmplace/simulation.hpp"

#include <algorithm>

#include "vmplace/workload.hpp"

namespace vmplace {

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Place: return "PLACE";
        case EventKind::SpikeStart: return "SPIKE_START";
        case EventKind::SpikeEnd: return "SPIKE_END";
        case EventKind::Hotspot: return "HOTSPOT";
        case EventKind::Migrate: return "MIGRATE";
        case EventKind::Unresolved: return "UNRESOLVED";
    }
    return "?";
}

namespace {

VmCatalog with_resolved_dominants(const VmCatalog& vms, const ClassifierConfig& cfg) {
    std::vector<VmSpec> resolved = vms.all();
    for (VmSpec& vm : resolved) {
        vm.dominant_set = resolved_dominant_set(vm, cfg);
    }
    return VmCatalog(std::move(resolved));
}

}  // namespace

SimulationEngine::SimulationEngine(ClusterState state, const VmCatalog& vms, SimConfig cfg)
    : state_(std::move(state)), vms_(with_resolved_dominants(vms, cfg.classifier)),
      cfg_(cfg) {
    for (const VmSpec& vm : vms_.all()) spike_state_[vm.id] = false;
}

void SimulationEngine::step() {
    ++tick_;

    DemandMap demands;
    demands.reserve(vms_.size());
    for (const VmSpec& vm : vms_.all()) {
        if (!state_.host_of(vm.id).has_value()) continue;
        demands.emplace(vm.id, generate_demand(vm, tick_, cfg_.seed));
    }

    // Spike transitions, in catalog order.
    for (const VmSpec& vm : vms_.all()) {
        const auto host = state_.host_of(vm.id);
        if (!host.has_value()) continue;
        const bool active = spike_active(vm, tick_, cfg_.seed);
        bool& previous = spike_state_[vm.id];
        if (active != previous) {
            events_.push_back({tick_, active ? EventKind::SpikeStart : EventKind::SpikeEnd,
                               vm.id, *host, -1, -1,
                               utilization(state_.server(*host), demands)});
            previous = active;
        }
    }

    const std::vector<OverloadReport> reports =
        detect_overloads(state_, demands, cfg_.threshold);
    for (const OverloadReport& report : reports) {
        ++metrics_.hot_spot_events;
        for (int vm_id : state_.server(report.server_id).hosted) {
            metrics_.priority_weighted_violation += vms_.at(vm_id).priority;
        }
        events_.push_back({tick_, EventKind::Hotspot, -1, report.server_id, -1, -1,
                           report.utilization_at_detection});
    }

    std::vector<int> unresolved;
    if (cfg_.mitigation && !reports.empty()) {
        MitigationConfig mit;
        mit.threshold = cfg_.threshold;
        mit.eviction_order = cfg_.eviction_order;
        mit.classifier = cfg_.classifier;
        const MigrationPlan plan = plan_migrations(state_, reports, demands, vms_, mit);

        // Scratch replay for the per-move utilization snapshots.
        ClusterState replay = state_;
        std::vector<Event> move_events;
        move_events.reserve(plan.moves.size());
        for (const Migration& m : plan.moves) {
            replay.move(m.vm_id, m.dst_server_id);
            move_events.push_back({tick_, EventKind::Migrate, m.vm_id, -1, m.src_server_id,
                                   m.dst_server_id,
                                   utilization(replay.server(m.dst_server_id), demands)});
        }
        metrics_.migrations += static_cast<std::int64_t>(apply_plan(state_, plan));
        for (Event& e : move_events) events_.push_back(std::move(e));
        unresolved = plan.unresolved;
    } else {
        for (const OverloadReport& report : reports) unresolved.push_back(report.server_id);
    }

    for (int server_id : unresolved) {
        ++metrics_.unresolved_ticks;
        events_.push_back({tick_, EventKind::Unresolved, -1, server_id, -1, -1,
                           utilization(state_.server(server_id), demands)});
    }

    metrics_.mean_utilization_series.push_back(mean_utilization(state_.servers(), demands));
}

void SimulationEngine::run_ticks(std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) step();
}

}  // namespace vmplace
