#include "vmplace/model.hpp"

#include <algorithm>
#include <string>

#include "vmplace/errors.hpp"

namespace vmplace {

VmCatalog::VmCatalog(std::vector<VmSpec> vms) : vms_(std::move(vms)) {
    index_.reserve(vms_.size());
    for (std::size_t i = 0; i < vms_.size(); ++i) {
        auto [it, inserted] = index_.emplace(vms_[i].id, i);
        if (!inserted) {
            throw ValidationError("duplicate vm id " + std::to_string(vms_[i].id));
        }
    }
}

const VmSpec* VmCatalog::find(int vm_id) const {
    auto it = index_.find(vm_id);
    return it == index_.end() ? nullptr : &vms_[it->second];
}

const VmSpec& VmCatalog::at(int vm_id) const {
    const VmSpec* vm = find(vm_id);
    if (!vm) throw LookupError("unknown vm id " + std::to_string(vm_id));
    return *vm;
}

ClusterState::ClusterState(std::vector<ServerState> servers) : servers_(std::move(servers)) {
    server_index_.reserve(servers_.size());
    for (std::size_t i = 0; i < servers_.size(); ++i) {
        auto [it, inserted] = server_index_.emplace(servers_[i].id, i);
        if (!inserted) {
            throw ValidationError("duplicate server id " + std::to_string(servers_[i].id));
        }
    }
    for (const ServerState& s : servers_) {
        for (int vm_id : s.hosted) {
            auto [it, inserted] = placement_.emplace(vm_id, s.id);
            if (!inserted) {
                throw ValidationError("vm id " + std::to_string(vm_id) +
                                      " hosted on more than one server");
            }
        }
    }
}

const ServerState& ClusterState::server(int server_id) const {
    auto it = server_index_.find(server_id);
    if (it == server_index_.end()) {
        throw LookupError("unknown server id " + std::to_string(server_id));
    }
    return servers_[it->second];
}

ServerState& ClusterState::server_mutable(int server_id) {
    auto it = server_index_.find(server_id);
    if (it == server_index_.end()) {
        throw LookupError("unknown server id " + std::to_string(server_id));
    }
    return servers_[it->second];
}

std::optional<int> ClusterState::host_of(int vm_id) const {
    auto it = placement_.find(vm_id);
    if (it == placement_.end()) return std::nullopt;
    return it->second;
}

void ClusterState::assign(int vm_id, int server_id) {
    ServerState& dst = server_mutable(server_id);
    auto [it, inserted] = placement_.emplace(vm_id, server_id);
    if (!inserted) {
        throw ValidationError("vm id " + std::to_string(vm_id) + " is already placed");
    }
    dst.hosted.push_back(vm_id);
    ++version_;
}

void ClusterState::remove(int vm_id) {
    auto it = placement_.find(vm_id);
    if (it == placement_.end()) {
        throw LookupError("vm id " + std::to_string(vm_id) + " is not placed");
    }
    ServerState& src = server_mutable(it->second);
    src.hosted.erase(std::find(src.hosted.begin(), src.hosted.end(), vm_id));
    placement_.erase(it);
    ++version_;
}

void ClusterState::move(int vm_id, int dst_server_id) {
    auto it = placement_.find(vm_id);
    if (it == placement_.end()) {
        throw LookupError("vm id " + std::to_string(vm_id) + " is not placed");
    }
    ServerState& src = server_mutable(it->second);
    ServerState& dst = server_mutable(dst_server_id);
    src.hosted.erase(std::find(src.hosted.begin(), src.hosted.end(), vm_id));
    dst.hosted.push_back(vm_id);
    it->second = dst_server_id;
    ++version_;
}

ResourceVector hosted_demand(const ServerState& server, const VmCatalog& vms) {
    ResourceVector sum;
    for (int vm_id : server.hosted) sum += vms.at(vm_id).demand;
    return sum;
}

ResourceVector hosted_demand(const ServerState& server, const DemandMap& demands) {
    ResourceVector sum;
    for (int vm_id : server.hosted) {
        auto it = demands.find(vm_id);
        if (it == demands.end()) {
            throw LookupError("no demand recorded for vm id " + std::to_string(vm_id));
        }
        sum += it->second;
    }
    return sum;
}

namespace {

ResourceVector ratio(const ResourceVector& demand, const ResourceVector& capacity, int server_id) {
    ResourceVector u;
    for (ResourceKind r : kAllResources) {
        if (capacity[r] == 0.0) {
            if (demand[r] != 0.0) {
                throw DomainError("server " + std::to_string(server_id) + ": nonzero " +
                                  std::string(to_string(r)) + " demand against zero capacity");
            }
            u[r] = 0.0;
        } else {
            u[r] = demand[r] / capacity[r];
        }
    }
    return u;
}

}  // namespace

ResourceVector utilization(const ServerState& server, const VmCatalog& vms) {
    return ratio(hosted_demand(server, vms), server.capacity, server.id);
}

ResourceVector utilization(const ServerState& server, const DemandMap& demands) {
    return ratio(hosted_demand(server, demands), server.capacity, server.id);
}

bool fits(const ServerState& server, const VmSpec& vm, const VmCatalog& vms) {
    return (hosted_demand(server, vms) + vm.demand).fits_within(server.capacity);
}

bool fits_demand(const ServerState& server, const ResourceVector& extra,
                 const DemandMap& demands) {
    return (hosted_demand(server, demands) + extra).fits_within(server.capacity);
}

namespace {

template <typename Lookup>
ResourceVector mean_util(const std::vector<ServerState>& servers, const Lookup& lookup) {
    if (servers.empty()) {
        throw DomainError("mean utilization over an empty server collection");
    }
    ResourceVector sum;
    for (const ServerState& s : servers) sum += utilization(s, lookup);
    return sum * (1.0 / static_cast<double>(servers.size()));
}

}  // namespace

ResourceVector mean_utilization(const std::vector<ServerState>& servers, const VmCatalog& vms) {
    return mean_util(servers, vms);
}

ResourceVector mean_utilization(const std::vector<ServerState>& servers,
                                const DemandMap& demands) {
    return mean_util(servers, demands);
}

void validate_vm(const VmSpec& vm) {
    if (vm.id < 0) {
        throw ValidationError("vm id " + std::to_string(vm.id) + " must be non-negative");
    }
    if (vm.priority < kMinPriority || vm.priority > kMaxPriority) {
        throw ValidationError("vm " + std::to_string(vm.id) + ": priority " +
                              std::to_string(vm.priority) + " out of range [1, 100]");
    }
    if (!vm.demand.all_non_negative()) {
        throw ValidationError("vm " + std::to_string(vm.id) + ": demand " +
                              to_string(vm.demand) + " has a negative component");
    }
}

}  // namespace vmplace
