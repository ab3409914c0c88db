#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace cohesion {

struct ObjectId {
    std::uint32_t index = 0;

    constexpr ObjectId() = default;
    constexpr explicit ObjectId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}

    friend constexpr auto operator<=>(ObjectId, ObjectId) = default;
};

struct MorphismId {
    std::uint32_t index = 0;

    constexpr MorphismId() = default;
    constexpr explicit MorphismId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}

    friend constexpr auto operator<=>(MorphismId, MorphismId) = default;
};

}  // namespace cohesion

template <>
struct std::hash<cohesion::ObjectId> {
    std::size_t operator()(cohesion::ObjectId id) const noexcept { return id.index; }
};

template <>
struct std::hash<cohesion::MorphismId> {
    std::size_t operator()(cohesion::MorphismId id) const noexcept { return id.index; }
};
