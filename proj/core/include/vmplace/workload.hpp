#pragma once

#include <cstdint>

#include "vmplace/model.hpp"

namespace vmplace {

/// Whether the VM's spike is active at `tick`. A spike is active when any
/// of the per-tick Bernoulli draws in the window (tick - duration, tick]
/// succeeded; draws are a pure function of (seed, vm id, tick), so no
/// generator state is carried between ticks. Ticks start at 1.
bool spike_active(const VmSpec& vm, std::int64_t tick, std::uint64_t seed);

/// Actual demand of the VM at `tick`: base_fraction of the reserved
/// demand on every resource; while a spike is active the components in
/// the VM's dominant set are additionally multiplied by spike_multiplier,
/// capped at reserved * spike_multiplier. Uses the declared dominant set
/// (callers materialize inferred sets into the spec first); VMs without
/// one never spike.
ResourceVector generate_demand(const VmSpec& vm, std::int64_t tick, std::uint64_t seed);

}  // namespace vmplace
