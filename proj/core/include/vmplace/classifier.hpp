#pragma once

#include "vmplace/model.hpp"
#include "vmplace/resources.hpp"

namespace vmplace {

/// The five placement sets: one per resource kind for VMs dominated by
/// that resource, plus the no-preference set for everything else.
enum class PlacementSet : int {
    Cpu = 1,
    Memory = 2,
    Network = 3,
    Disk = 4,
    NoPreference = 5,
};

std::string_view to_string(PlacementSet set);

constexpr PlacementSet placement_set_of(ResourceKind kind) {
    return static_cast<PlacementSet>(static_cast<int>(kind) + 1);
}

/// Dominance rule: a resource is dominant when its demand share (demand
/// normalized by the reference capacity) is within a factor alpha of the
/// largest share.
struct ClassifierConfig {
    double alpha = 0.75;
    ResourceVector reference_capacity = ResourceVector::uniform(1.0);
};

/// Throws ValidationError naming the violated bound.
void validate_classifier_config(const ClassifierConfig& cfg);

/// Dominant resources of a demand vector: { r : share(r) >= alpha * max share }.
/// Non-empty by construction; all-zero demand raises ClassificationError.
ResourceSet infer_dominant_set(const ResourceVector& demand, const ClassifierConfig& cfg);

/// The VM's dominant set as used for placement: the declared set when
/// present, otherwise inferred from the reserved demand. All-zero demand
/// resolves to the empty set.
ResourceSet resolved_dominant_set(const VmSpec& vm, const ClassifierConfig& cfg);

/// Maps a VM to exactly one placement set: empty dominant set or three or
/// more dominants mean no preference; one or two dominants select the set
/// of the first dominant resource in fixed order.
PlacementSet assign_set(const VmSpec& vm, const ClassifierConfig& cfg);

}  // namespace vmplace
