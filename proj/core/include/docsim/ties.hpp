#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace docsim {

/// Strongly typed agent identifier. Identifiers are dense: an agent's id is
/// also its index in its population vector.
template <class Tag>
struct AgentId {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const AgentId&) const = default;
    constexpr std::size_t index() const { return value; }
};

struct DoctorTag;
struct PatientTag;
using DoctorId = AgentId<DoctorTag>;
using PatientId = AgentId<PatientTag>;

/// Directed tie strengths from one agent to a set of other agents, keyed by id.
///
/// Storage is dense over the key space with a presence mask; iteration is in
/// ascending key order. Absent keys behave like Python's `dict.get(k, 0)` in
/// the weighted aggregations.
template <class Key>
class TieMap {
public:
    TieMap() = default;

    /// Reserve room for keys in [0, key_space); no key is present afterwards.
    explicit TieMap(std::size_t key_space) : strength_(key_space, 0.0), present_(key_space, 0) {}

    bool empty() const { return count_ == 0; }
    std::size_t size() const { return count_; }

    bool contains(Key key) const { return key.index() < present_.size() && present_[key.index()] != 0; }

    std::optional<double> find(Key key) const {
        if (!contains(key)) return std::nullopt;
        return strength_[key.index()];
    }

    double get_or_zero(Key key) const { return contains(key) ? strength_[key.index()] : 0.0; }

    void set(Key key, double strength) {
        if (key.index() >= present_.size()) {
            strength_.resize(key.index() + 1, 0.0);
            present_.resize(key.index() + 1, 0);
        }
        if (present_[key.index()] == 0) {
            present_[key.index()] = 1;
            ++count_;
        }
        strength_[key.index()] = strength;
    }

    /// Mutable access to a present key. Precondition: contains(key).
    double& at(Key key) { return strength_[key.index()]; }
    double at(Key key) const { return strength_[key.index()]; }

    /// The n-th present key in ascending order. Precondition: n < size().
    Key nth_key(std::size_t n) const {
        for (std::size_t i = 0; i < present_.size(); ++i) {
            if (present_[i] != 0 && n-- == 0) return Key{static_cast<std::uint32_t>(i)};
        }
        return Key{};
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < present_.size(); ++i) {
            if (present_[i] != 0) f(Key{static_cast<std::uint32_t>(i)}, strength_[i]);
        }
    }

    template <class F>
    void for_each_mut(F&& f) {
        for (std::size_t i = 0; i < present_.size(); ++i) {
            if (present_[i] != 0) f(Key{static_cast<std::uint32_t>(i)}, strength_[i]);
        }
    }

    bool operator==(const TieMap& other) const {
        if (count_ != other.count_) return false;
        const std::size_t n = std::max(present_.size(), other.present_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const Key k{static_cast<std::uint32_t>(i)};
            if (contains(k) != other.contains(k)) return false;
            if (contains(k) && strength_[i] != other.strength_[i]) return false;
        }
        return true;
    }

private:
    std::vector<double> strength_;
    std::vector<std::uint8_t> present_;
    std::size_t count_ = 0;
};

}  // namespace docsim
