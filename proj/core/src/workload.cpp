#include "vmplace/workload.hpp"

#include <algorithm>

#include "vmplace/rng.hpp"

namespace vmplace {

bool spike_active(const VmSpec& vm, std::int64_t tick, std::uint64_t seed) {
    const WorkloadModel& model = vm.workload;
    if (model.spike_probability <= 0.0) return false;
    for (std::int64_t back = 0; back < model.spike_duration; ++back) {
        const std::int64_t start = tick - back;
        if (start < 1) break;
        const double u = rng::tick_draw(seed, static_cast<std::uint64_t>(vm.id),
                                        static_cast<std::uint64_t>(start));
        if (u < model.spike_probability) return true;
    }
    return false;
}

ResourceVector generate_demand(const VmSpec& vm, std::int64_t tick, std::uint64_t seed) {
    const WorkloadModel& model = vm.workload;
    ResourceVector actual = vm.demand * model.base_fraction;
    if (!vm.dominant_set.has_value() || vm.dominant_set->empty()) return actual;
    if (!spike_active(vm, tick, seed)) return actual;
    for (ResourceKind r : kAllResources) {
        if (!vm.dominant_set->contains(r)) continue;
        actual[r] = std::min(actual[r] * model.spike_multiplier,
                             vm.demand[r] * model.spike_multiplier);
    }
    return actual;
}

}  // namespace vmplace
