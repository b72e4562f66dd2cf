#include "vmplace/classifier.hpp"

#include <string>

#include "vmplace/errors.hpp"

namespace vmplace {

std::string_view to_string(PlacementSet set) {
    switch (set) {
        case PlacementSet::Cpu: return "S1(cpu)";
        case PlacementSet::Memory: return "S2(memory)";
        case PlacementSet::Network: return "S3(network)";
        case PlacementSet::Disk: return "S4(disk)";
        case PlacementSet::NoPreference: return "S5(none)";
    }
    return "?";
}

void validate_classifier_config(const ClassifierConfig& cfg) {
    if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0) {
        throw ValidationError("classifier.alpha: " + std::to_string(cfg.alpha) +
                              " out of range (0, 1]");
    }
    for (ResourceKind r : kAllResources) {
        if (!(cfg.reference_capacity[r] > 0.0)) {
            throw ValidationError("classifier.reference_capacity." +
                                  std::string(to_string(r)) + " must be > 0");
        }
    }
}

ResourceSet infer_dominant_set(const ResourceVector& demand, const ClassifierConfig& cfg) {
    if (demand.all_zero()) {
        throw ClassificationError("cannot classify an all-zero demand vector");
    }
    ResourceVector shares;
    for (ResourceKind r : kAllResources) {
        shares[r] = demand[r] / cfg.reference_capacity[r];
    }
    const double cutoff = cfg.alpha * shares.max_component();
    ResourceSet dominant;
    for (ResourceKind r : kAllResources) {
        if (shares[r] >= cutoff) dominant.add(r);
    }
    return dominant;
}

ResourceSet resolved_dominant_set(const VmSpec& vm, const ClassifierConfig& cfg) {
    if (vm.dominant_set.has_value()) return *vm.dominant_set;
    if (vm.demand.all_zero()) return {};
    return infer_dominant_set(vm.demand, cfg);
}

PlacementSet assign_set(const VmSpec& vm, const ClassifierConfig& cfg) {
    const ResourceSet dominant = resolved_dominant_set(vm, cfg);
    if (dominant.empty() || dominant.size() >= 3) return PlacementSet::NoPreference;
    return placement_set_of(dominant.first());
}

}  // namespace vmplace
