#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace trigather {

/// A vertex of the infinite triangular grid, in the internal frame where the
/// agreed axis is vertical.
///
/// `col` indexes the vertical grid lines left to right; `hrow` is the vertical
/// position in half-units (Euclidean y = hrow/2, x = col*sqrt(3)/2). Only
/// points with col == hrow (mod 2) exist on the lattice; with that parity,
/// every pair of adjacent vertices is at Euclidean distance exactly 1.
struct GridPoint {
    int col = 0;
    int hrow = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline bool is_valid(GridPoint p) {
    return ((p.col ^ p.hrow) & 1) == 0;
}

inline std::string to_string(GridPoint p) {
    return "(" + std::to_string(p.col) + "," + std::to_string(p.hrow) + ")";
}

inline void require_valid(GridPoint p) {
    if (!is_valid(p)) {
        throw std::invalid_argument("invalid grid point " + to_string(p) +
                                    ": col and hrow must have equal parity");
    }
}

/// The six neighbor directions, in the fixed enumeration order used everywhere
/// (neighbor lists, view bits, truth tables).
enum class Direction : std::uint8_t {
    Up = 0,
    UpRight = 1,
    DownRight = 2,
    Down = 3,
    DownLeft = 4,
    UpLeft = 5,
};

inline constexpr int kDirectionCount = 6;

inline constexpr std::array<Direction, 6> all_directions() {
    return {Direction::Up,   Direction::UpRight,  Direction::DownRight,
            Direction::Down, Direction::DownLeft, Direction::UpLeft};
}

/// (col, hrow) offset of one hop in direction d.
inline constexpr std::pair<int, int> offset(Direction d) {
    switch (d) {
        case Direction::Up: return {0, 2};
        case Direction::UpRight: return {1, 1};
        case Direction::DownRight: return {1, -1};
        case Direction::Down: return {0, -2};
        case Direction::DownLeft: return {-1, -1};
        case Direction::UpLeft: return {-1, 1};
    }
    return {0, 0};  // unreachable
}

inline constexpr GridPoint step_towards(GridPoint p, Direction d) {
    const auto [dc, dh] = offset(d);
    return {p.col + dc, p.hrow + dh};
}

inline constexpr const char* to_string(Direction d) {
    switch (d) {
        case Direction::Up: return "up";
        case Direction::UpRight: return "up-right";
        case Direction::DownRight: return "down-right";
        case Direction::Down: return "down";
        case Direction::DownLeft: return "down-left";
        case Direction::UpLeft: return "up-left";
    }
    return "?";
}

inline constexpr bool is_downward(Direction d) {
    return d == Direction::Down || d == Direction::DownLeft ||
           d == Direction::DownRight;
}

/// The six adjacent vertices of p, ordered Up, UpRight, DownRight, Down,
/// DownLeft, UpLeft. Throws on an off-lattice p.
inline std::array<GridPoint, 6> neighbors(GridPoint p) {
    require_valid(p);
    std::array<GridPoint, 6> out{};
    for (int i = 0; i < kDirectionCount; ++i) {
        out[static_cast<std::size_t>(i)] =
            step_towards(p, static_cast<Direction>(i));
    }
    return out;
}

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Euclidean embedding; used for exports and plots only, never for decisions.
inline Vec2 to_euclidean(GridPoint p) {
    require_valid(p);
    constexpr double kColPitch = 0.8660254037844386467637231707529362;  // sqrt(3)/2
    return {p.col * kColPitch, p.hrow * 0.5};
}

/// Direction d with p + offset(d) == q, or nullopt when q is not adjacent.
inline std::optional<Direction> direction_between(GridPoint p, GridPoint q) {
    require_valid(p);
    require_valid(q);
    for (Direction d : all_directions()) {
        if (step_towards(p, d) == q) return d;
    }
    return std::nullopt;
}

/// Per-robot handedness. The adversary fixes it once per robot; Mirrored
/// swaps the Left/Right components of every direction and fixes Up/Down.
enum class Chirality : std::uint8_t { Standard, Mirrored };

inline constexpr Direction mirrored(Direction d) {
    switch (d) {
        case Direction::Up: return Direction::Up;
        case Direction::Down: return Direction::Down;
        case Direction::UpLeft: return Direction::UpRight;
        case Direction::UpRight: return Direction::UpLeft;
        case Direction::DownLeft: return Direction::DownRight;
        case Direction::DownRight: return Direction::DownLeft;
    }
    return d;  // unreachable
}

/// Global direction -> the robot's local frame.
inline constexpr Direction localize(Direction d, Chirality c) {
    return c == Chirality::Mirrored ? mirrored(d) : d;
}

/// Local direction -> the global frame. Inverse of localize (the mirror is an
/// involution).
inline constexpr Direction globalize(Direction d, Chirality c) {
    return c == Chirality::Mirrored ? mirrored(d) : d;
}

struct GridPointHash {
    std::size_t operator()(GridPoint p) const noexcept {
        std::uint64_t z = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.col)) << 32) |
                          static_cast<std::uint32_t>(p.hrow);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

}  // namespace trigather
