#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vmplace/resources.hpp"

namespace vmplace {

/// Per-VM parameters of the time-varying actual demand process.
/// Calm demand is base_fraction of the reserved demand. A spike
/// multiplies the dominant components only; spikes start with
/// spike_probability per tick and last spike_duration ticks.
struct WorkloadModel {
    double base_fraction = 0.5;
    double spike_probability = 0.1;
    double spike_multiplier = 2.0;
    std::int64_t spike_duration = 3;

    friend bool operator==(const WorkloadModel&, const WorkloadModel&) = default;
};

inline constexpr int kMinPriority = 1;
inline constexpr int kMaxPriority = 100;

/// One virtual machine. `demand` is the reserved demand used for
/// placement decisions; `dominant_set` is the declared dominant-resource
/// set (std::nullopt means "not declared, infer from demand").
struct VmSpec {
    int id = 0;
    int app_id = 0;
    int priority = kMinPriority;
    ResourceVector demand;
    std::optional<ResourceSet> dominant_set;
    WorkloadModel workload;
};

/// One physical server and the ids of the VMs it currently hosts.
struct ServerState {
    int id = 0;
    ResourceVector capacity;
    std::vector<int> hosted;
};

/// Sparse assignment VM id -> server id. Ordered so iteration and
/// serialization are deterministic.
using Placement = std::map<int, int>;

/// Actual (time-varying) demand per VM id, as produced by the workload
/// model at one tick.
using DemandMap = std::unordered_map<int, ResourceVector>;

/// Immutable, id-indexed collection of VM specs.
class VmCatalog {
public:
    VmCatalog() = default;
    /// Throws ValidationError if two specs share an id.
    explicit VmCatalog(std::vector<VmSpec> vms);

    const std::vector<VmSpec>& all() const { return vms_; }
    std::size_t size() const { return vms_.size(); }
    bool empty() const { return vms_.empty(); }

    const VmSpec* find(int vm_id) const;
    /// Throws LookupError naming the id if absent.
    const VmSpec& at(int vm_id) const;

private:
    std::vector<VmSpec> vms_;
    std::unordered_map<int, std::size_t> index_;
};

/// Servers plus the placement map, kept bidirectionally consistent.
/// Every mutation (assign/remove/move) updates both views and bumps the
/// version counter used for stale-plan detection.
class ClusterState {
public:
    ClusterState() = default;
    /// Servers may arrive pre-loaded; the placement map is derived from
    /// their hosted lists. Throws ValidationError on duplicate server ids
    /// or on a VM hosted more than once.
    explicit ClusterState(std::vector<ServerState> servers);

    const std::vector<ServerState>& servers() const { return servers_; }
    const Placement& placement() const { return placement_; }
    std::uint64_t version() const { return version_; }

    const ServerState& server(int server_id) const;
    std::optional<int> host_of(int vm_id) const;

    void assign(int vm_id, int server_id);
    void remove(int vm_id);
    void move(int vm_id, int dst_server_id);

private:
    ServerState& server_mutable(int server_id);

    std::vector<ServerState> servers_;
    Placement placement_;
    std::unordered_map<int, std::size_t> server_index_;
    std::uint64_t version_ = 0;
};

/// Sum of the demands of the VMs hosted on `server`, in hosted order.
ResourceVector hosted_demand(const ServerState& server, const VmCatalog& vms);
/// Same, but with per-VM actual demands. Every hosted id must be present
/// in `demands` (LookupError otherwise).
ResourceVector hosted_demand(const ServerState& server, const DemandMap& demands);

/// Per-resource utilization u_r = (sum of hosted demands) / capacity.
/// Components may exceed 1.0 when overcommitted. 0/0 is taken as 0;
/// positive demand against zero capacity raises DomainError.
ResourceVector utilization(const ServerState& server, const VmCatalog& vms);
ResourceVector utilization(const ServerState& server, const DemandMap& demands);

/// True iff the server can additionally host `vm` in every resource
/// (exact <=, reserved demands).
bool fits(const ServerState& server, const VmSpec& vm, const VmCatalog& vms);
/// Same check against actual demands: `extra` on top of the hosted sum.
bool fits_demand(const ServerState& server, const ResourceVector& extra,
                 const DemandMap& demands);

/// Arithmetic mean of utilization over the servers; DomainError when the
/// collection is empty.
ResourceVector mean_utilization(const std::vector<ServerState>& servers, const VmCatalog& vms);
ResourceVector mean_utilization(const std::vector<ServerState>& servers, const DemandMap& demands);

/// Range checks on one spec: priority in [1, 100], demand non-negative.
/// Throws ValidationError naming the field and bound.
void validate_vm(const VmSpec& vm);

}  // namespace vmplace
