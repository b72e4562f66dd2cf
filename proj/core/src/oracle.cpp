#include "vmplace/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "vmplace/errors.hpp"

namespace vmplace {

namespace {

struct SearchServer {
    int id;
    ResourceVector capacity;
    ResourceVector load;  // includes any pre-hosted VMs
};

double max_utilization(const std::vector<SearchServer>& servers) {
    double m = 0.0;
    for (const SearchServer& s : servers) {
        for (ResourceKind r : kAllResources) {
            if (s.capacity[r] == 0.0) continue;
            m = std::max(m, s.load[r] / s.capacity[r]);
        }
    }
    return m;
}

struct Search {
    std::vector<SearchServer> servers;
    std::vector<const VmSpec*> pending;  // vm-id order, the lexicographic axis
    std::vector<std::size_t> assignment;
    std::vector<std::size_t> best_assignment;
    double best_objective = std::numeric_limits<double>::infinity();
    bool found = false;

    // Depth-first over complete assignments. Exploration follows vm-id
    // major, server-id minor order, so the first assignment reaching an
    // objective is the lexicographically smallest; improvement is strict.
    void visit(std::size_t depth) {
        if (max_utilization(servers) >= best_objective) return;
        if (depth == pending.size()) {
            best_objective = max_utilization(servers);
            best_assignment = assignment;
            found = true;
            return;
        }
        const ResourceVector& demand = pending[depth]->demand;
        for (std::size_t j = 0; j < servers.size(); ++j) {
            if (!(servers[j].load + demand).fits_within(servers[j].capacity)) continue;
            servers[j].load += demand;
            assignment[depth] = j;
            visit(depth + 1);
            servers[j].load -= demand;
        }
    }
};

}  // namespace

OracleResult exact_oracle(const VmCatalog& vms, const std::vector<ServerState>& servers,
                          const OracleLimits& limits) {
    Search search;
    search.servers.reserve(servers.size());
    for (const ServerState& s : servers) {
        search.servers.push_back({s.id, s.capacity, hosted_demand(s, vms)});
    }
    std::sort(search.servers.begin(), search.servers.end(),
              [](const SearchServer& a, const SearchServer& b) { return a.id < b.id; });

    Placement fixed;
    for (const ServerState& s : servers) {
        for (int vm_id : s.hosted) fixed.emplace(vm_id, s.id);
    }
    for (const VmSpec& vm : vms.all()) {
        if (!fixed.contains(vm.id)) search.pending.push_back(&vm);
    }
    std::sort(search.pending.begin(), search.pending.end(),
              [](const VmSpec* a, const VmSpec* b) { return a->id < b->id; });

    if (search.pending.size() > limits.max_vms) {
        throw SizeLimitError("oracle instance has " + std::to_string(search.pending.size()) +
                             " unplaced vms, limit is " + std::to_string(limits.max_vms));
    }
    if (servers.size() > limits.max_servers) {
        throw SizeLimitError("oracle instance has " + std::to_string(servers.size()) +
                             " servers, limit is " + std::to_string(limits.max_servers));
    }

    search.assignment.resize(search.pending.size());
    search.visit(0);

    OracleResult result;
    if (!search.found) {
        result.feasible = false;
        result.objective_value = std::numeric_limits<double>::infinity();
        return result;
    }
    result.feasible = true;
    result.objective_value = search.best_objective;
    Placement placement = fixed;
    for (std::size_t i = 0; i < search.pending.size(); ++i) {
        placement.emplace(search.pending[i]->id, search.servers[search.best_assignment[i]].id);
    }
    result.best_placement = std::move(placement);
    return result;
}

}  // namespace vmplace
