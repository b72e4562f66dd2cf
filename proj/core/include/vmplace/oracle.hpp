#pragma once

#include <cstdint>
#include <optional>

#include "vmplace/model.hpp"

namespace vmplace {

/// Hard caps on the exhaustive search; the assignment space is
/// |servers| ^ |vms|.
struct OracleLimits {
    std::size_t max_vms = 10;
    std::size_t max_servers = 4;
};

struct OracleResult {
    bool feasible = false;
    std::optional<Placement> best_placement;
    /// Minimized maximum per-resource utilization over all servers;
    /// +infinity when infeasible.
    double objective_value = 0.0;
};

/// Enumerates every complete VM-to-server assignment and returns the
/// feasible one minimizing the maximum utilization component across
/// servers. Ties resolve to the lexicographically first assignment in
/// vm-id order. Throws SizeLimitError beyond the limits.
OracleResult exact_oracle(const VmCatalog& vms, const std::vector<ServerState>& servers,
                          const OracleLimits& limits = {});

}  // namespace vmplace
