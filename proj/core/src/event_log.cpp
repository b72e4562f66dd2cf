#include <nlohmann/json.hpp>

#include "vmplace/simulation.hpp"

namespace vmplace {

// Event-log line schema; field names and order are fixed, see
// docs/event_log.md.
std::string to_json_line(const Event& event) {
    nlohmann::ordered_json line;
    line["tick"] = event.tick;
    line["kind"] = std::string(to_string(event.kind));
    if (event.vm_id >= 0) line["vm"] = event.vm_id;
    if (event.server_id >= 0) line["server"] = event.server_id;
    if (event.src_server_id >= 0) line["src"] = event.src_server_id;
    if (event.dst_server_id >= 0) line["dst"] = event.dst_server_id;
    nlohmann::ordered_json util = nlohmann::ordered_json::array();
    for (ResourceKind r : kAllResources) util.push_back(event.util[r]);
    line["util"] = std::move(util);
    return line.dump();
}

}  // namespace vmplace
