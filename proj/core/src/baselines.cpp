#include "vmplace/baselines.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "vmplace/errors.hpp"
#include "vmplace/oracle.hpp"
#include "vmplace/rng.hpp"

namespace vmplace {

namespace {

struct ServerLoad {
    int server_id;
    ResourceVector capacity;
    ResourceVector used;
};

// Shared scan skeleton: VMs in id order, destination chosen by `pick`.
template <typename Pick>
InitialPlacementReport scan_place(ClusterState& state, const VmCatalog& vms, Pick pick) {
    InitialPlacementReport report;

    std::vector<ServerLoad> loads;
    loads.reserve(state.servers().size());
    for (const ServerState& s : state.servers()) {
        loads.push_back({s.id, s.capacity, hosted_demand(s, vms)});
    }
    std::sort(loads.begin(), loads.end(),
              [](const ServerLoad& a, const ServerLoad& b) { return a.server_id < b.server_id; });

    std::vector<const VmSpec*> pending;
    for (const VmSpec& vm : vms.all()) {
        if (!state.host_of(vm.id).has_value()) pending.push_back(&vm);
    }
    std::sort(pending.begin(), pending.end(),
              [](const VmSpec* a, const VmSpec* b) { return a->id < b->id; });

    for (const VmSpec* vm : pending) {
        ServerLoad* dst = pick(loads, *vm);
        if (!dst) {
            report.unplaced.push_back(
                {vm->id, "no server satisfies demand " + to_string(vm->demand)});
            continue;
        }
        dst->used += vm->demand;
        state.assign(vm->id, dst->server_id);
        report.placement.emplace(vm->id, dst->server_id);
        report.placement_order.emplace_back(vm->id, dst->server_id);
    }
    return report;
}

bool can_host(const ServerLoad& s, const ResourceVector& demand) {
    return (s.used + demand).fits_within(s.capacity);
}

double post_max_utilization(const ServerLoad& s, const ResourceVector& demand) {
    double m = 0.0;
    for (ResourceKind r : kAllResources) {
        const double cap = s.capacity[r];
        if (cap == 0.0) continue;
        m = std::max(m, (s.used[r] + demand[r]) / cap);
    }
    return m;
}

}  // namespace

InitialPlacementReport first_fit(ClusterState& state, const VmCatalog& vms) {
    return scan_place(state, vms, [](std::vector<ServerLoad>& loads, const VmSpec& vm) {
        for (ServerLoad& s : loads) {
            if (can_host(s, vm.demand)) return &s;
        }
        return static_cast<ServerLoad*>(nullptr);
    });
}

InitialPlacementReport best_fit(ClusterState& state, const VmCatalog& vms) {
    return scan_place(state, vms, [](std::vector<ServerLoad>& loads, const VmSpec& vm) {
        ServerLoad* best = nullptr;
        double best_util = -1.0;
        for (ServerLoad& s : loads) {
            if (!can_host(s, vm.demand)) continue;
            const double util = post_max_utilization(s, vm.demand);
            if (util > best_util) {  // tightest fit; loads are in id order
                best = &s;
                best_util = util;
            }
        }
        return best;
    });
}

InitialPlacementReport random_fit(ClusterState& state, const VmCatalog& vms,
                                  std::uint64_t seed) {
    rng::SplitMix64 gen(seed);
    return scan_place(state, vms, [&gen](std::vector<ServerLoad>& loads, const VmSpec& vm) {
        std::vector<ServerLoad*> fitting;
        for (ServerLoad& s : loads) {
            if (can_host(s, vm.demand)) fitting.push_back(&s);
        }
        if (fitting.empty()) return static_cast<ServerLoad*>(nullptr);
        return fitting[gen.next_below(fitting.size())];
    });
}

std::string_view to_string(PlacerKind kind) {
    switch (kind) {
        case PlacerKind::Graybox: return "graybox";
        case PlacerKind::FirstFit: return "first-fit";
        case PlacerKind::BestFit: return "best-fit";
        case PlacerKind::Random: return "random";
        case PlacerKind::Oracle: return "oracle";
    }
    return "?";
}

PlacerKind placer_kind_from_string(std::string_view name) {
    for (PlacerKind k : {PlacerKind::Graybox, PlacerKind::FirstFit, PlacerKind::BestFit,
                         PlacerKind::Random, PlacerKind::Oracle}) {
        if (name == to_string(k)) return k;
    }
    throw ValidationError("unknown placer '" + std::string(name) +
                          "' (expected graybox|first-fit|best-fit|random|oracle)");
}

InitialPlacementReport run_placer(PlacerKind kind, ClusterState& state, const VmCatalog& vms,
                                  const ClassifierConfig& cfg, std::uint64_t seed,
                                  const OracleLimits& limits) {
    switch (kind) {
        case PlacerKind::Graybox: return place_all(state, vms, cfg);
        case PlacerKind::FirstFit: return first_fit(state, vms);
        case PlacerKind::BestFit: return best_fit(state, vms);
        case PlacerKind::Random: return random_fit(state, vms, seed);
        case PlacerKind::Oracle: break;
    }
    const OracleResult result = exact_oracle(vms, state.servers(), limits);
    InitialPlacementReport report;
    if (!result.feasible) {
        for (const VmSpec& vm : vms.all()) {
            if (!state.host_of(vm.id).has_value()) {
                report.unplaced.push_back({vm.id, "no feasible complete assignment"});
            }
        }
        return report;
    }
    for (const auto& [vm_id, server_id] : *result.best_placement) {
        if (state.host_of(vm_id).has_value()) continue;
        state.assign(vm_id, server_id);
        report.placement.emplace(vm_id, server_id);
        report.placement_order.emplace_back(vm_id, server_id);
    }
    return report;
}

}  // namespace vmplace
