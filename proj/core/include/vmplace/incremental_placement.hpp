#pragma once

#include <cstdint>
#include <vector>

#include "vmplace/classifier.hpp"
#include "vmplace/model.hpp"

namespace vmplace {

struct OverloadReport {
    int server_id = 0;
    ResourceSet overloaded_resources;
    ResourceVector utilization_at_detection;
};

struct Migration {
    int vm_id = 0;
    int src_server_id = 0;
    int dst_server_id = 0;

    friend bool operator==(const Migration&, const Migration&) = default;
};

struct MigrationPlan {
    std::vector<Migration> moves;
    /// Servers still overloaded after the pass.
    std::vector<int> unresolved;
    /// State version the plan was computed against.
    std::uint64_t base_version = 0;
};

enum class EvictionOrder {
    LowPriorityFirst,   // Fig. 2 line 1
    HighPriorityFirst,  // inverted control, for experiments only
};

struct MitigationConfig {
    double threshold = 1.0;
    EvictionOrder eviction_order = EvictionOrder::LowPriorityFirst;
    ClassifierConfig classifier;
};

/// One report per server whose actual-demand utilization exceeds the
/// threshold in any resource, ordered by server id. Threshold must lie
/// in (0, 2].
std::vector<OverloadReport> detect_overloads(const ClusterState& state, const DemandMap& demands,
                                             double threshold);

/// For each overloaded server, evict VMs in priority order (lowest
/// first; ties prefer the larger demand of the resource that triggered
/// the overload, then the smaller id) until the server drops back under
/// the threshold. Each victim goes to the server with the largest
/// residual capacity of its dominant resource among those that can take
/// its full actual demand without exceeding the threshold themselves.
/// Victims with no feasible destination are skipped; servers that stay
/// overloaded are listed as unresolved.
MigrationPlan plan_migrations(const ClusterState& state,
                              const std::vector<OverloadReport>& overloads,
                              const DemandMap& demands, const VmCatalog& vms,
                              const MitigationConfig& cfg);

/// Applies the moves in order; throws StalePlanError when the state
/// version differs from the one the plan was computed against. Returns
/// the number of applied moves.
std::size_t apply_plan(ClusterState& state, const MigrationPlan& plan);

}  // namespace vmplace
