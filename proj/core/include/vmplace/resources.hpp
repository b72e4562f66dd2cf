#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace vmplace {

/// The four resource dimensions tracked per VM and per server.
/// Iteration order is fixed: CPU, Memory, Network, Disk.
enum class ResourceKind : int {
    Cpu = 0,
    Memory = 1,
    Network = 2,
    Disk = 3,
};

inline constexpr std::size_t kResourceCount = 4;

inline constexpr std::array<ResourceKind, kResourceCount> kAllResources{
    ResourceKind::Cpu,
    ResourceKind::Memory,
    ResourceKind::Network,
    ResourceKind::Disk,
};

std::string_view to_string(ResourceKind kind);
ResourceKind resource_kind_from_string(std::string_view name);

/// A non-negative quantity per resource dimension, in abstract capacity
/// units. Used for demands, capacities, residuals and utilizations alike.
class ResourceVector {
public:
    constexpr ResourceVector() : values_{} {}
    constexpr ResourceVector(double cpu, double memory, double network, double disk)
        : values_{cpu, memory, network, disk} {}

    static constexpr ResourceVector uniform(double v) { return {v, v, v, v}; }

    constexpr double operator[](ResourceKind kind) const {
        return values_[static_cast<std::size_t>(kind)];
    }
    constexpr double& operator[](ResourceKind kind) {
        return values_[static_cast<std::size_t>(kind)];
    }
    constexpr double at_index(std::size_t i) const { return values_[i]; }

    /// True iff every component is <= the corresponding component of
    /// `other`. Comparison is exact, no epsilon slack.
    constexpr bool fits_within(const ResourceVector& other) const {
        for (std::size_t i = 0; i < kResourceCount; ++i) {
            if (values_[i] > other.values_[i]) return false;
        }
        return true;
    }

    constexpr bool all_zero() const {
        for (double v : values_) {
            if (v != 0.0) return false;
        }
        return true;
    }

    constexpr bool all_non_negative() const {
        for (double v : values_) {
            if (v < 0.0) return false;
        }
        return true;
    }

    constexpr double max_component() const {
        double m = values_[0];
        for (std::size_t i = 1; i < kResourceCount; ++i) m = values_[i] > m ? values_[i] : m;
        return m;
    }

    constexpr double min_component() const {
        double m = values_[0];
        for (std::size_t i = 1; i < kResourceCount; ++i) m = values_[i] < m ? values_[i] : m;
        return m;
    }

    constexpr ResourceVector& operator+=(const ResourceVector& rhs) {
        for (std::size_t i = 0; i < kResourceCount; ++i) values_[i] += rhs.values_[i];
        return *this;
    }
    constexpr ResourceVector& operator-=(const ResourceVector& rhs) {
        for (std::size_t i = 0; i < kResourceCount; ++i) values_[i] -= rhs.values_[i];
        return *this;
    }
    friend constexpr ResourceVector operator+(ResourceVector lhs, const ResourceVector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend constexpr ResourceVector operator-(ResourceVector lhs, const ResourceVector& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend constexpr ResourceVector operator*(ResourceVector lhs, double s) {
        for (std::size_t i = 0; i < kResourceCount; ++i) lhs.values_[i] *= s;
        return lhs;
    }

    friend constexpr bool operator==(const ResourceVector&, const ResourceVector&) = default;

private:
    std::array<double, kResourceCount> values_;
};

std::string to_string(const ResourceVector& v);

/// A subset of the four resource kinds, kept in fixed CPU..Disk order.
/// Small bitmask value type; `first()` is the lowest-ordered member.
class ResourceSet {
public:
    constexpr ResourceSet() = default;
    constexpr ResourceSet(std::initializer_list<ResourceKind> kinds) {
        for (ResourceKind k : kinds) add(k);
    }

    constexpr void add(ResourceKind kind) { bits_ |= bit(kind); }
    constexpr void remove(ResourceKind kind) { bits_ &= static_cast<std::uint8_t>(~bit(kind)); }
    constexpr bool contains(ResourceKind kind) const { return (bits_ & bit(kind)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr std::size_t size() const {
        std::size_t n = 0;
        for (ResourceKind k : kAllResources) n += contains(k) ? 1 : 0;
        return n;
    }

    /// Lowest member in resource order; only valid on non-empty sets.
    constexpr ResourceKind first() const {
        for (ResourceKind k : kAllResources) {
            if (contains(k)) return k;
        }
        return ResourceKind::Cpu;
    }

    friend constexpr bool operator==(const ResourceSet&, const ResourceSet&) = default;

private:
    static constexpr std::uint8_t bit(ResourceKind kind) {
        return static_cast<std::uint8_t>(1u << static_cast<int>(kind));
    }
    std::uint8_t bits_ = 0;
};

std::string to_string(const ResourceSet& set);

}  // namespace vmplace
