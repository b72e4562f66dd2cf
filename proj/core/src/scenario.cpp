#include "vmplace/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vmplace/errors.hpp"
#include "vmplace/rng.hpp"

namespace vmplace {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ValidationError(field + ": " + what);
}

void check_keys(const json& obj, const std::string& field,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (key == k) known = true;
        }
        if (!known) fail(field + "." + key, "unknown key");
    }
}

double as_number(const json& v, const std::string& field) {
    if (!v.is_number()) fail(field, "expected a number");
    return v.get<double>();
}

std::int64_t as_integer(const json& v, const std::string& field) {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<std::int64_t>();
}

ResourceVector as_resource_vector(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != kResourceCount) {
        fail(field, "expected an array of 4 numbers [cpu, memory, network, disk]");
    }
    ResourceVector out;
    for (std::size_t i = 0; i < kResourceCount; ++i) {
        out[kAllResources[i]] = as_number(v[i], field + "[" + std::to_string(i) + "]");
    }
    return out;
}

ResourceSet as_resource_set(const json& v, const std::string& field) {
    if (!v.is_array()) fail(field, "expected an array of resource names");
    ResourceSet set;
    for (const json& item : v) {
        if (!item.is_string()) fail(field, "expected resource names as strings");
        set.add(resource_kind_from_string(item.get<std::string>()));
    }
    return set;
}

json resource_vector_to_json(const ResourceVector& v) {
    json out = json::array();
    for (ResourceKind r : kAllResources) out.push_back(v[r]);
    return out;
}

json resource_set_to_json(const ResourceSet& set) {
    json out = json::array();
    for (ResourceKind r : kAllResources) {
        if (set.contains(r)) out.push_back(std::string(to_string(r)));
    }
    return out;
}

WorkloadModel parse_workload(const json& obj, const std::string& field,
                             const WorkloadModel& defaults) {
    check_keys(obj, field,
               {"base_fraction", "spike_probability", "spike_multiplier", "spike_duration"});
    WorkloadModel model = defaults;
    if (obj.contains("base_fraction")) {
        model.base_fraction = as_number(obj["base_fraction"], field + ".base_fraction");
    }
    if (obj.contains("spike_probability")) {
        model.spike_probability =
            as_number(obj["spike_probability"], field + ".spike_probability");
    }
    if (obj.contains("spike_multiplier")) {
        model.spike_multiplier = as_number(obj["spike_multiplier"], field + ".spike_multiplier");
    }
    if (obj.contains("spike_duration")) {
        model.spike_duration = as_integer(obj["spike_duration"], field + ".spike_duration");
    }
    return model;
}

void validate_workload(const WorkloadModel& model, const std::string& field) {
    if (!(model.base_fraction > 0.0) || model.base_fraction > 1.0) {
        fail(field + ".base_fraction",
             std::to_string(model.base_fraction) + " out of range (0, 1]");
    }
    if (model.spike_probability < 0.0 || model.spike_probability > 1.0) {
        fail(field + ".spike_probability",
             std::to_string(model.spike_probability) + " out of range [0, 1]");
    }
    if (model.spike_multiplier < 1.0) {
        fail(field + ".spike_multiplier",
             std::to_string(model.spike_multiplier) + " must be >= 1");
    }
    if (model.spike_duration < 1) {
        fail(field + ".spike_duration",
             std::to_string(model.spike_duration) + " must be >= 1");
    }
}

struct PrioritySpec {
    int fixed = 0;
    int lo = 0, hi = 0;
    bool uniform = false;
};

PrioritySpec parse_priority_spec(const json& v, const std::string& field) {
    PrioritySpec spec;
    if (v.is_number_integer()) {
        spec.fixed = static_cast<int>(as_integer(v, field));
        return spec;
    }
    if (v.is_object()) {
        check_keys(v, field, {"uniform"});
        if (!v.contains("uniform") || !v["uniform"].is_array() || v["uniform"].size() != 2) {
            fail(field, "expected an integer or {\"uniform\": [lo, hi]}");
        }
        spec.uniform = true;
        spec.lo = static_cast<int>(as_integer(v["uniform"][0], field + ".uniform[0]"));
        spec.hi = static_cast<int>(as_integer(v["uniform"][1], field + ".uniform[1]"));
        if (spec.lo > spec.hi) fail(field + ".uniform", "lo > hi");
        return spec;
    }
    fail(field, "expected an integer or {\"uniform\": [lo, hi]}");
}

struct DemandSpec {
    ResourceVector fixed;
    bool ranged = false;
    double dominant_lo = 0.0, dominant_hi = 0.0;
    double other_lo = 0.0, other_hi = 0.0;
};

DemandSpec parse_demand_spec(const json& v, const std::string& field) {
    DemandSpec spec;
    if (v.is_array()) {
        spec.fixed = as_resource_vector(v, field);
        return spec;
    }
    if (v.is_object()) {
        check_keys(v, field, {"dominant_range", "other_range"});
        auto range = [&](const char* key, double& lo, double& hi) {
            if (!v.contains(key) || !v[key].is_array() || v[key].size() != 2) {
                fail(field + "." + key, "expected [lo, hi]");
            }
            lo = as_number(v[key][0], field + "." + key + "[0]");
            hi = as_number(v[key][1], field + "." + key + "[1]");
            if (lo > hi || lo < 0.0) fail(field + "." + key, "expected 0 <= lo <= hi");
        };
        spec.ranged = true;
        range("dominant_range", spec.dominant_lo, spec.dominant_hi);
        range("other_range", spec.other_lo, spec.other_hi);
        return spec;
    }
    fail(field, "expected [4 numbers] or {\"dominant_range\", \"other_range\"}");
}

std::vector<VmSpec> expand_groups(const json& groups, const WorkloadModel& defaults,
                                  std::uint64_t seed) {
    rng::SplitMix64 gen(rng::stream_seed(seed, "vm_gen"));
    std::vector<VmSpec> vms;
    int next_id = 0;
    int group_index = 0;
    for (const json& group : groups) {
        const std::string field = "vms.groups[" + std::to_string(group_index) + "]";
        check_keys(group, field, {"count", "app_id", "priority", "demand", "dominant",
                                  "workload"});
        if (!group.contains("count") || !group.contains("demand")) {
            fail(field, "requires count and demand");
        }
        const std::int64_t count = as_integer(group["count"], field + ".count");
        if (count < 0) fail(field + ".count", "must be >= 0");

        std::optional<ResourceSet> dominant;
        if (group.contains("dominant") && !group["dominant"].is_null()) {
            dominant = as_resource_set(group["dominant"], field + ".dominant");
        }
        const PrioritySpec priority = group.contains("priority")
                                          ? parse_priority_spec(group["priority"],
                                                                field + ".priority")
                                          : PrioritySpec{50, 0, 0, false};
        const DemandSpec demand = parse_demand_spec(group["demand"], field + ".demand");
        const WorkloadModel workload =
            group.contains("workload")
                ? parse_workload(group["workload"], field + ".workload", defaults)
                : defaults;
        const int app_id = group.contains("app_id")
                               ? static_cast<int>(as_integer(group["app_id"],
                                                             field + ".app_id"))
                               : group_index;

        for (std::int64_t i = 0; i < count; ++i) {
            VmSpec vm;
            vm.id = next_id++;
            vm.app_id = app_id;
            vm.priority = priority.uniform
                              ? priority.lo + static_cast<int>(gen.next_below(
                                    static_cast<std::uint64_t>(priority.hi - priority.lo + 1)))
                              : priority.fixed;
            if (demand.ranged) {
                for (ResourceKind r : kAllResources) {
                    const bool dom = dominant.has_value() && dominant->contains(r);
                    vm.demand[r] = dom ? gen.next_in(demand.dominant_lo, demand.dominant_hi)
                                       : gen.next_in(demand.other_lo, demand.other_hi);
                }
            } else {
                vm.demand = demand.fixed;
            }
            vm.dominant_set = dominant;
            vm.workload = workload;
            vms.push_back(vm);
        }
        ++group_index;
    }
    return vms;
}

}  // namespace

void validate_scenario(const Scenario& scenario) {
    if (scenario.ticks < 0) fail("ticks", std::to_string(scenario.ticks) + " must be >= 0");
    if (!(scenario.threshold > 0.0) || scenario.threshold > 2.0) {
        fail("threshold", std::to_string(scenario.threshold) + " out of range (0, 2]");
    }
    validate_classifier_config(scenario.classifier);
    validate_workload(scenario.workload_defaults, "workload");
    if (scenario.oracle_limits.max_vms < 1) fail("oracle_limits.max_vms", "must be >= 1");
    if (scenario.oracle_limits.max_servers < 1) {
        fail("oracle_limits.max_servers", "must be >= 1");
    }

    if (scenario.servers.empty()) fail("servers", "must not be empty");
    std::vector<int> server_ids;
    for (std::size_t i = 0; i < scenario.servers.size(); ++i) {
        const ServerState& s = scenario.servers[i];
        const std::string field = "servers[" + std::to_string(i) + "]";
        if (s.id < 0) fail(field + ".id", "must be >= 0");
        if (!s.capacity.all_non_negative()) {
            fail(field + ".capacity", to_string(s.capacity) + " has a negative component");
        }
        if (!s.hosted.empty()) fail(field, "scenario servers must start empty");
        server_ids.push_back(s.id);
    }
    std::sort(server_ids.begin(), server_ids.end());
    if (std::adjacent_find(server_ids.begin(), server_ids.end()) != server_ids.end()) {
        fail("servers", "duplicate server id");
    }

    std::vector<int> vm_ids;
    for (std::size_t i = 0; i < scenario.vms.size(); ++i) {
        const VmSpec& vm = scenario.vms[i];
        const std::string field = "vms[" + std::to_string(i) + "]";
        if (vm.id < 0) fail(field + ".id", "must be >= 0");
        if (vm.priority < kMinPriority || vm.priority > kMaxPriority) {
            fail(field + ".priority",
                 std::to_string(vm.priority) + " out of range [1, 100]");
        }
        if (!vm.demand.all_non_negative()) {
            fail(field + ".demand", to_string(vm.demand) + " has a negative component");
        }
        validate_workload(vm.workload, field + ".workload");
        vm_ids.push_back(vm.id);
    }
    std::sort(vm_ids.begin(), vm_ids.end());
    if (std::adjacent_find(vm_ids.begin(), vm_ids.end()) != vm_ids.end()) {
        fail("vms", "duplicate vm id");
    }
}

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ValidationError(origin + ": expected a JSON object");

    check_keys(doc, "scenario",
               {"seed", "ticks", "threshold", "mitigation", "allow_unplaced", "placer",
                "eviction_order", "classifier", "workload", "oracle_limits", "servers", "vms"});

    Scenario s;
    auto defaulted = [&s](const std::string& note) { s.applied_defaults.push_back(note); };

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
            fail("seed", "expected a non-negative integer");
        }
        s.seed = doc["seed"].get<std::uint64_t>();
    } else {
        defaulted("seed = 1");
    }
    if (doc.contains("ticks")) {
        s.ticks = as_integer(doc["ticks"], "ticks");
    } else {
        defaulted("ticks = 100");
    }
    if (doc.contains("threshold")) {
        s.threshold = as_number(doc["threshold"], "threshold");
    } else {
        defaulted("threshold = 1");
    }
    if (doc.contains("mitigation")) {
        if (!doc["mitigation"].is_boolean()) fail("mitigation", "expected a boolean");
        s.mitigation = doc["mitigation"].get<bool>();
    } else {
        defaulted("mitigation = true");
    }
    if (doc.contains("allow_unplaced")) {
        if (!doc["allow_unplaced"].is_boolean()) fail("allow_unplaced", "expected a boolean");
        s.allow_unplaced = doc["allow_unplaced"].get<bool>();
    } else {
        defaulted("allow_unplaced = false");
    }
    if (doc.contains("placer")) {
        if (!doc["placer"].is_string()) fail("placer", "expected a string");
        s.placer = placer_kind_from_string(doc["placer"].get<std::string>());
    } else {
        defaulted("placer = graybox");
    }
    if (doc.contains("eviction_order")) {
        const std::string order = doc["eviction_order"].get<std::string>();
        if (order == "low-priority-first") {
            s.eviction_order = EvictionOrder::LowPriorityFirst;
        } else if (order == "high-priority-first") {
            s.eviction_order = EvictionOrder::HighPriorityFirst;
        } else {
            fail("eviction_order",
                 "'" + order + "' (expected low-priority-first|high-priority-first)");
        }
    } else {
        defaulted("eviction_order = low-priority-first");
    }

    if (doc.contains("workload")) {
        s.workload_defaults = parse_workload(doc["workload"], "workload", WorkloadModel{});
    } else {
        defaulted("workload = {base_fraction 0.5, spike_probability 0.1, "
                  "spike_multiplier 2, spike_duration 3}");
    }

    if (doc.contains("oracle_limits")) {
        const json& lim = doc["oracle_limits"];
        check_keys(lim, "oracle_limits", {"max_vms", "max_servers"});
        if (lim.contains("max_vms")) {
            s.oracle_limits.max_vms =
                static_cast<std::size_t>(as_integer(lim["max_vms"], "oracle_limits.max_vms"));
        }
        if (lim.contains("max_servers")) {
            s.oracle_limits.max_servers = static_cast<std::size_t>(
                as_integer(lim["max_servers"], "oracle_limits.max_servers"));
        }
    } else {
        defaulted("oracle_limits = {max_vms 10, max_servers 4}");
    }

    // Servers: explicit list or {count, capacity}.
    if (!doc.contains("servers")) fail("servers", "required");
    const json& servers = doc["servers"];
    if (servers.is_array()) {
        int next_id = 0;
        for (std::size_t i = 0; i < servers.size(); ++i) {
            const std::string field = "servers[" + std::to_string(i) + "]";
            check_keys(servers[i], field, {"id", "capacity"});
            if (!servers[i].contains("capacity")) fail(field + ".capacity", "required");
            ServerState server;
            server.id = servers[i].contains("id")
                            ? static_cast<int>(as_integer(servers[i]["id"], field + ".id"))
                            : next_id;
            next_id = server.id + 1;
            server.capacity = as_resource_vector(servers[i]["capacity"], field + ".capacity");
            s.servers.push_back(std::move(server));
        }
    } else if (servers.is_object()) {
        check_keys(servers, "servers", {"count", "capacity"});
        if (!servers.contains("count") || !servers.contains("capacity")) {
            fail("servers", "requires count and capacity");
        }
        const std::int64_t count = as_integer(servers["count"], "servers.count");
        if (count < 1) fail("servers.count", "must be >= 1");
        const ResourceVector capacity =
            as_resource_vector(servers["capacity"], "servers.capacity");
        for (std::int64_t i = 0; i < count; ++i) {
            s.servers.push_back({static_cast<int>(i), capacity, {}});
        }
    } else {
        fail("servers", "expected a list or {count, capacity}");
    }

    // VMs: explicit list or {groups: [...]} generator spec.
    if (!doc.contains("vms")) fail("vms", "required");
    const json& vms = doc["vms"];
    if (vms.is_array()) {
        int next_id = 0;
        for (std::size_t i = 0; i < vms.size(); ++i) {
            const std::string field = "vms[" + std::to_string(i) + "]";
            check_keys(vms[i], field,
                       {"id", "app_id", "priority", "demand", "dominant", "workload"});
            if (!vms[i].contains("demand")) fail(field + ".demand", "required");
            VmSpec vm;
            vm.id = vms[i].contains("id")
                        ? static_cast<int>(as_integer(vms[i]["id"], field + ".id"))
                        : next_id;
            next_id = vm.id + 1;
            vm.app_id = vms[i].contains("app_id")
                            ? static_cast<int>(as_integer(vms[i]["app_id"], field + ".app_id"))
                            : 0;
            vm.priority =
                vms[i].contains("priority")
                    ? static_cast<int>(as_integer(vms[i]["priority"], field + ".priority"))
                    : 50;
            vm.demand = as_resource_vector(vms[i]["demand"], field + ".demand");
            if (vms[i].contains("dominant") && !vms[i]["dominant"].is_null()) {
                vm.dominant_set = as_resource_set(vms[i]["dominant"], field + ".dominant");
            }
            vm.workload = vms[i].contains("workload")
                              ? parse_workload(vms[i]["workload"], field + ".workload",
                                               s.workload_defaults)
                              : s.workload_defaults;
            s.vms.push_back(std::move(vm));
        }
    } else if (vms.is_object()) {
        check_keys(vms, "vms", {"groups"});
        if (!vms.contains("groups") || !vms["groups"].is_array()) {
            fail("vms.groups", "expected a list of group specs");
        }
        s.vms = expand_groups(vms["groups"], s.workload_defaults, s.seed);
    } else {
        fail("vms", "expected a list or {groups: [...]}");
    }

    // Classifier; the reference capacity defaults to the mean server
    // capacity so shares are comparable across resources.
    ResourceVector mean_capacity;
    for (const ServerState& server : s.servers) mean_capacity += server.capacity;
    if (!s.servers.empty()) {
        mean_capacity = mean_capacity * (1.0 / static_cast<double>(s.servers.size()));
    }
    if (doc.contains("classifier")) {
        const json& cls = doc["classifier"];
        check_keys(cls, "classifier", {"alpha", "reference_capacity"});
        if (cls.contains("alpha")) {
            s.classifier.alpha = as_number(cls["alpha"], "classifier.alpha");
        } else {
            defaulted("classifier.alpha = 0.75");
        }
        if (cls.contains("reference_capacity")) {
            s.classifier.reference_capacity =
                as_resource_vector(cls["reference_capacity"], "classifier.reference_capacity");
        } else {
            s.classifier.reference_capacity = mean_capacity;
            defaulted("classifier.reference_capacity = mean server capacity " +
                      to_string(mean_capacity));
        }
    } else {
        s.classifier.alpha = 0.75;
        s.classifier.reference_capacity = mean_capacity;
        defaulted("classifier = {alpha 0.75, reference_capacity mean server capacity " +
                  to_string(mean_capacity) + "}");
    }

    validate_scenario(s);
    return s;
}

Scenario parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("scenario file not found or unreadable: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path);
}

std::string dump_scenario(const Scenario& s) {
    json doc;
    doc["seed"] = s.seed;
    doc["ticks"] = s.ticks;
    doc["threshold"] = s.threshold;
    doc["mitigation"] = s.mitigation;
    doc["allow_unplaced"] = s.allow_unplaced;
    doc["placer"] = std::string(to_string(s.placer));
    doc["eviction_order"] = s.eviction_order == EvictionOrder::LowPriorityFirst
                                ? "low-priority-first"
                                : "high-priority-first";
    doc["classifier"] = {{"alpha", s.classifier.alpha},
                         {"reference_capacity",
                          resource_vector_to_json(s.classifier.reference_capacity)}};
    doc["workload"] = {{"base_fraction", s.workload_defaults.base_fraction},
                       {"spike_probability", s.workload_defaults.spike_probability},
                       {"spike_multiplier", s.workload_defaults.spike_multiplier},
                       {"spike_duration", s.workload_defaults.spike_duration}};
    doc["oracle_limits"] = {{"max_vms", s.oracle_limits.max_vms},
                            {"max_servers", s.oracle_limits.max_servers}};
    doc["servers"] = json::array();
    for (const ServerState& server : s.servers) {
        doc["servers"].push_back(
            {{"id", server.id}, {"capacity", resource_vector_to_json(server.capacity)}});
    }
    doc["vms"] = json::array();
    for (const VmSpec& vm : s.vms) {
        json v = {{"id", vm.id},
                  {"app_id", vm.app_id},
                  {"priority", vm.priority},
                  {"demand", resource_vector_to_json(vm.demand)},
                  {"workload",
                   {{"base_fraction", vm.workload.base_fraction},
                    {"spike_probability", vm.workload.spike_probability},
                    {"spike_multiplier", vm.workload.spike_multiplier},
                    {"spike_duration", vm.workload.spike_duration}}}};
        if (vm.dominant_set.has_value()) {
            v["dominant"] = resource_set_to_json(*vm.dominant_set);
        } else {
            v["dominant"] = nullptr;
        }
        doc["vms"].push_back(std::move(v));
    }
    return doc.dump(2) + "\n";
}

SimConfig sim_config_of(const Scenario& scenario) {
    SimConfig cfg;
    cfg.seed = scenario.seed;
    cfg.threshold = scenario.threshold;
    cfg.mitigation = scenario.mitigation;
    cfg.eviction_order = scenario.eviction_order;
    cfg.classifier = scenario.classifier;
    return cfg;
}

SimResult run_scenario(const Scenario& scenario) {
    validate_scenario(scenario);

    VmCatalog catalog(scenario.vms);
    ClusterState state(scenario.servers);
    InitialPlacementReport initial = run_placer(scenario.placer, state, catalog,
                                                scenario.classifier, scenario.seed,
                                                scenario.oracle_limits);
    if (!initial.unplaced.empty() && !scenario.allow_unplaced) {
        std::string ids;
        for (const UnplacedVm& u : initial.unplaced) {
            if (!ids.empty()) ids += ", ";
            ids += std::to_string(u.vm_id);
        }
        throw UnplacedError("initial placement left " +
                                std::to_string(initial.unplaced.size()) +
                                " vm(s) unplaced: " + ids,
                            std::move(initial));
    }

    SimResult result;
    result.initial = initial;

    // Tick-0 placement events, with the reserved-demand utilization of
    // the receiving server after each assignment.
    ClusterState replay(scenario.servers);
    std::vector<Event> events;
    for (const auto& [vm_id, server_id] : initial.placement_order) {
        replay.assign(vm_id, server_id);
        events.push_back({0, EventKind::Place, vm_id, server_id, -1, -1,
                          utilization(replay.server(server_id), catalog)});
    }

    SimulationEngine engine(std::move(state), catalog, sim_config_of(scenario));
    engine.run_ticks(scenario.ticks);

    result.metrics = engine.metrics();
    result.final_placement = engine.state().placement();
    for (const Event& e : engine.events()) events.push_back(e);
    result.events = std::move(events);
    return result;
}

}  // namespace vmplace
