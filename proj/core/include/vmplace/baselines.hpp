#pragma once

#include <cstdint>
#include <string_view>

#include "vmplace/initial_placement.hpp"
#include "vmplace/model.hpp"

namespace vmplace {

/// Reference placers against which the set-spreading placer is compared.

/// Each VM (id order) lands on the lowest-id server that fits it.
InitialPlacementReport first_fit(ClusterState& state, const VmCatalog& vms);

/// Each VM (id order) lands on the tightest fitting server: the one with
/// the highest post-placement maximum utilization component. Ties by id.
InitialPlacementReport best_fit(ClusterState& state, const VmCatalog& vms);

/// Each VM (id order) lands on a uniformly random fitting server. The
/// draw sequence is SplitMix64 seeded with `seed`, one draw per placed
/// VM, reduced modulo the number of fitting servers; equal seeds are
/// bit-reproducible.
InitialPlacementReport random_fit(ClusterState& state, const VmCatalog& vms, std::uint64_t seed);

enum class PlacerKind {
    Graybox,
    FirstFit,
    BestFit,
    Random,
    Oracle,
};

std::string_view to_string(PlacerKind kind);
PlacerKind placer_kind_from_string(std::string_view name);

struct OracleLimits;  // oracle.hpp

/// Dispatch by placer name. `cfg` matters for graybox, `seed` for
/// random, `limits` for the oracle.
InitialPlacementReport run_placer(PlacerKind kind, ClusterState& state, const VmCatalog& vms,
                                  const ClassifierConfig& cfg, std::uint64_t seed,
                                  const OracleLimits& limits);

}  // namespace vmplace
