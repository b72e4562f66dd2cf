#include "vmplace/incremental_placement.hpp"

#include <algorithm>
#include <string>

#include "vmplace/errors.hpp"

namespace vmplace {

namespace {

ResourceSet over_threshold(const ResourceVector& util, double threshold) {
    ResourceSet over;
    for (ResourceKind r : kAllResources) {
        if (util[r] > threshold) over.add(r);
    }
    return over;
}

// Fig. 2 line 4 names a single dominant resource per VM; when the VM has
// several, the one that triggered the overload wins, otherwise the first
// in resource order. VMs without a preference rank by the trigger.
ResourceKind effective_dominant(const VmSpec& vm, ResourceKind trigger,
                                const ClassifierConfig& cfg) {
    const ResourceSet dominant = resolved_dominant_set(vm, cfg);
    if (dominant.empty() || dominant.contains(trigger)) return trigger;
    return dominant.first();
}

}  // namespace

std::vector<OverloadReport> detect_overloads(const ClusterState& state, const DemandMap& demands,
                                             double threshold) {
    if (!(threshold > 0.0) || threshold > 2.0) {
        throw ValidationError("threshold: " + std::to_string(threshold) +
                              " out of range (0, 2]");
    }
    std::vector<OverloadReport> reports;
    for (const ServerState& s : state.servers()) {
        const ResourceVector util = utilization(s, demands);
        const ResourceSet over = over_threshold(util, threshold);
        if (!over.empty()) reports.push_back({s.id, over, util});
    }
    std::sort(reports.begin(), reports.end(),
              [](const OverloadReport& a, const OverloadReport& b) {
                  return a.server_id < b.server_id;
              });
    return reports;
}

MigrationPlan plan_migrations(const ClusterState& state,
                              const std::vector<OverloadReport>& overloads,
                              const DemandMap& demands, const VmCatalog& vms,
                              const MitigationConfig& cfg) {
    MigrationPlan plan;
    plan.base_version = state.version();
    if (overloads.empty()) return plan;

    // Work on a scratch copy so destination checks see earlier moves.
    ClusterState working = state;

    std::vector<const OverloadReport*> ordered;
    ordered.reserve(overloads.size());
    for (const OverloadReport& r : overloads) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(),
              [](const OverloadReport* a, const OverloadReport* b) {
                  return a->server_id < b->server_id;
              });

    for (const OverloadReport* report : ordered) {
        const int src_id = report->server_id;
        const ResourceKind trigger = report->overloaded_resources.first();

        // Candidate order is fixed up front: priority, then the demand of
        // the triggering resource, then id.
        std::vector<int> candidates = working.server(src_id).hosted;
        const bool low_first = cfg.eviction_order == EvictionOrder::LowPriorityFirst;
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            const VmSpec& va = vms.at(a);
            const VmSpec& vb = vms.at(b);
            if (va.priority != vb.priority) {
                return low_first ? va.priority < vb.priority : va.priority > vb.priority;
            }
            auto da = demands.find(a);
            auto db = demands.find(b);
            const double ta = da == demands.end() ? 0.0 : da->second[trigger];
            const double tb = db == demands.end() ? 0.0 : db->second[trigger];
            if (ta != tb) return ta > tb;
            return a < b;
        });

        bool resolved = false;
        for (int vm_id : candidates) {
            const ResourceVector src_util = utilization(working.server(src_id), demands);
            const ResourceSet still_over = over_threshold(src_util, cfg.threshold);
            if (still_over.empty()) {
                resolved = true;
                break;
            }

            auto demand_it = demands.find(vm_id);
            if (demand_it == demands.end()) {
                throw LookupError("no demand recorded for vm id " + std::to_string(vm_id));
            }
            const ResourceVector& vm_demand = demand_it->second;

            // Moving a VM with no load on any overloaded resource cannot
            // shrink the hot spot; skip it.
            bool relieves = false;
            for (ResourceKind r : kAllResources) {
                if (still_over.contains(r) && vm_demand[r] > 0.0) relieves = true;
            }
            if (!relieves) continue;

            const ResourceKind rank_resource =
                effective_dominant(vms.at(vm_id), trigger, cfg.classifier);

            const ServerState* best = nullptr;
            double best_residual = 0.0;
            for (const ServerState& dst : working.servers()) {
                if (dst.id == src_id) continue;
                const ResourceVector dst_load = hosted_demand(dst, demands);
                if (!(dst_load + vm_demand).fits_within(dst.capacity)) continue;
                bool under_threshold = true;
                for (ResourceKind r : kAllResources) {
                    const double cap = dst.capacity[r];
                    const double post = dst_load[r] + vm_demand[r];
                    if (cap == 0.0) continue;  // post == 0 here, fits_within held
                    if (post / cap > cfg.threshold) under_threshold = false;
                }
                if (!under_threshold) continue;
                const double residual = dst.capacity[rank_resource] - dst_load[rank_resource];
                if (!best || residual > best_residual ||
                    (residual == best_residual && dst.id < best->id)) {
                    best = &dst;
                    best_residual = residual;
                }
            }
            if (!best) continue;  // no feasible destination, try the next VM

            plan.moves.push_back({vm_id, src_id, best->id});
            working.move(vm_id, best->id);
        }

        if (!resolved) {
            const ResourceVector final_util = utilization(working.server(src_id), demands);
            if (!over_threshold(final_util, cfg.threshold).empty()) {
                plan.unresolved.push_back(src_id);
            }
        }
    }
    return plan;
}

std::size_t apply_plan(ClusterState& state, const MigrationPlan& plan) {
    if (state.version() != plan.base_version) {
        throw StalePlanError("plan computed against state version " +
                             std::to_string(plan.base_version) + ", state is now at " +
                             std::to_string(state.version()));
    }
    for (const Migration& m : plan.moves) {
        state.move(m.vm_id, m.dst_server_id);
    }
    return plan.moves.size();
}

}  // namespace vmplace
