#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vmplace/classifier.hpp"
#include "vmplace/model.hpp"

namespace vmplace {

struct UnplacedVm {
    int vm_id = 0;
    std::string reason;
};

struct InitialPlacementReport {
    /// Assignments made by this run (does not repeat pre-loaded VMs).
    Placement placement;
    std::vector<UnplacedVm> unplaced;
    /// (vm id, server id) in the order the placer decided them.
    std::vector<std::pair<int, int>> placement_order;
};

/// One-shot placement of every not-yet-hosted VM in the catalog.
///
/// VMs are handled set by set (S1..S5). Within a set they are taken in
/// priority order (descending, ties by id). For S1..S4 the servers are
/// scanned in order of available capacity of the set's resource,
/// re-evaluated after every placement; for S5 the order is by the
/// minimum available-capacity share across all four resources. A VM goes
/// to the first scanned server that can satisfy its whole demand vector;
/// a VM that fits nowhere is reported in `unplaced` and the run continues.
InitialPlacementReport place_all(ClusterState& state, const VmCatalog& vms,
                                 const ClassifierConfig& cfg);

}  // namespace vmplace
