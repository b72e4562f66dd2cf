#include "vmplace/initial_placement.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace vmplace {

namespace {

struct ServerSlot {
    int server_id;
    ResourceVector capacity;
    ResourceVector used;

    ResourceVector available() const { return capacity - used; }

    bool can_host(const ResourceVector& demand) const {
        return (used + demand).fits_within(capacity);
    }

    // Ordering key for S5: the most balanced headroom first.
    double min_available_share() const {
        double m = std::numeric_limits<double>::infinity();
        for (ResourceKind r : kAllResources) {
            const double share = capacity[r] == 0.0 ? 0.0 : (capacity[r] - used[r]) / capacity[r];
            m = std::min(m, share);
        }
        return m;
    }
};

void sort_slots(std::vector<ServerSlot>& slots, PlacementSet set) {
    if (set == PlacementSet::NoPreference) {
        std::sort(slots.begin(), slots.end(), [](const ServerSlot& a, const ServerSlot& b) {
            const double sa = a.min_available_share();
            const double sb = b.min_available_share();
            if (sa != sb) return sa > sb;
            return a.server_id < b.server_id;
        });
        return;
    }
    const auto r = static_cast<ResourceKind>(static_cast<int>(set) - 1);
    std::sort(slots.begin(), slots.end(), [r](const ServerSlot& a, const ServerSlot& b) {
        const double aa = a.available()[r];
        const double ab = b.available()[r];
        if (aa != ab) return aa > ab;
        return a.server_id < b.server_id;
    });
}

}  // namespace

InitialPlacementReport place_all(ClusterState& state, const VmCatalog& vms,
                                 const ClassifierConfig& cfg) {
    InitialPlacementReport report;

    std::vector<ServerSlot> slots;
    slots.reserve(state.servers().size());
    for (const ServerState& s : state.servers()) {
        slots.push_back({s.id, s.capacity, hosted_demand(s, vms)});
    }

    // Bucket the unplaced population into the five sets.
    std::array<std::vector<const VmSpec*>, 5> sets;
    for (const VmSpec& vm : vms.all()) {
        if (state.host_of(vm.id).has_value()) continue;
        const int set_index = static_cast<int>(assign_set(vm, cfg)) - 1;
        sets[static_cast<std::size_t>(set_index)].push_back(&vm);
    }

    for (int set_label = 1; set_label <= 5; ++set_label) {
        auto& bucket = sets[static_cast<std::size_t>(set_label - 1)];
        std::sort(bucket.begin(), bucket.end(), [](const VmSpec* a, const VmSpec* b) {
            if (a->priority != b->priority) return a->priority > b->priority;
            return a->id < b->id;
        });

        const auto set = static_cast<PlacementSet>(set_label);
        for (const VmSpec* vm : bucket) {
            sort_slots(slots, set);
            bool placed = false;
            for (ServerSlot& slot : slots) {
                if (!slot.can_host(vm->demand)) continue;
                slot.used += vm->demand;
                state.assign(vm->id, slot.server_id);
                report.placement.emplace(vm->id, slot.server_id);
                report.placement_order.emplace_back(vm->id, slot.server_id);
                placed = true;
                break;
            }
            if (!placed) {
                report.unplaced.push_back({vm->id, "no server satisfies demand " +
                                                       to_string(vm->demand)});
            }
        }
    }
    return report;
}

}  // namespace vmplace
