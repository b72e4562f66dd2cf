#include "vmplace/resources.hpp"

#include <sstream>

#include "vmplace/errors.hpp"

namespace vmplace {

std::string_view to_string(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::Cpu: return "cpu";
        case ResourceKind::Memory: return "memory";
        case ResourceKind::Network: return "network";
        case ResourceKind::Disk: return "disk";
    }
    return "?";
}

ResourceKind resource_kind_from_string(std::string_view name) {
    for (ResourceKind k : kAllResources) {
        if (name == to_string(k)) return k;
    }
    throw ValidationError("unknown resource kind '" + std::string(name) +
                          "' (expected cpu|memory|network|disk)");
}

std::string to_string(const ResourceVector& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < kResourceCount; ++i) {
        if (i) out << ", ";
        out << v.at_index(i);
    }
    out << ']';
    return out.str();
}

std::string to_string(const ResourceSet& set) {
    std::string out = "{";
    bool first = true;
    for (ResourceKind k : kAllResources) {
        if (!set.contains(k)) continue;
        if (!first) out += ", ";
        out += to_string(k);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace vmplace
