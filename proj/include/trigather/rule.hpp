#pragma once

#include "trigather/config.hpp"
#include "trigather/grid.hpp"

namespace trigather {

/// The 6-bit snapshot a robot takes: occupancy of its six adjacent vertices,
/// expressed in the robot's local frame. The robot's own vertex and any
/// multiplicity are invisible.
struct View {
    std::array<bool, 6> occ{};

    bool operator[](Direction d) const { return occ[static_cast<std::size_t>(d)]; }
    bool& operator[](Direction d) { return occ[static_cast<std::size_t>(d)]; }

    /// Bit i corresponds to Direction(i); 64 distinct views.
    unsigned mask() const {
        unsigned m = 0;
        for (int i = 0; i < kDirectionCount; ++i) {
            if (occ[static_cast<std::size_t>(i)]) m |= 1u << i;
        }
        return m;
    }

    static View from_mask(unsigned m) {
        View v;
        for (int i = 0; i < kDirectionCount; ++i) {
            v.occ[static_cast<std::size_t>(i)] = (m >> i) & 1u;
        }
        return v;
    }

    friend bool operator==(const View&, const View&) = default;
};

inline View local_view(const Configuration& c, int id) {
    const GridPoint at = c.position(id);
    const Chirality ch = c.chirality(id);
    View v;
    for (Direction d : all_directions()) {
        if (c.occupied(step_towards(at, d))) v[localize(d, ch)] = true;
    }
    return v;
}

/// A robot is extreme when nothing is directly above it and at least one of
/// its open halves (left or right) is empty.
inline bool is_extreme(const View& v) {
    if (v[Direction::Up]) return false;
    const bool left_empty = !v[Direction::UpLeft] && !v[Direction::DownLeft];
    const bool right_empty = !v[Direction::UpRight] && !v[Direction::DownRight];
    return left_empty || right_empty;
}

/// The three neighbors an extreme robot can name, ordered by height:
/// v1 directly below, v2/v3 the lower/upper diagonal of the non-empty half.
/// v2 and v3 are unset when both halves are empty.
struct NamedPositions {
    Direction v1 = Direction::Down;
    std::optional<Direction> v2;
    std::optional<Direction> v3;
};

inline NamedPositions named_positions(const View& v) {
    if (!is_extreme(v)) {
        throw std::logic_error("named_positions called on a non-extreme view");
    }
    NamedPositions n;
    const bool left_empty = !v[Direction::UpLeft] && !v[Direction::DownLeft];
    const bool right_empty = !v[Direction::UpRight] && !v[Direction::DownRight];
    if (!right_empty) {
        n.v2 = Direction::DownRight;
        n.v3 = Direction::UpRight;
    } else if (!left_empty) {
        n.v2 = Direction::DownLeft;
        n.v3 = Direction::UpLeft;
    }
    return n;
}

enum class Action : std::uint8_t { Terminate, Stay, Move };

struct Decision {
    Action action = Action::Stay;
    Direction target = Direction::Down;  // meaningful only when action == Move

    static Decision terminate() { return {Action::Terminate, Direction::Down}; }
    static Decision stay() { return {Action::Stay, Direction::Down}; }
    static Decision move(Direction d) { return {Action::Move, d}; }

    friend bool operator==(const Decision& a, const Decision& b) {
        if (a.action != b.action) return false;
        return a.action != Action::Move || a.target == b.target;
    }
};

/// The complete local rule. Extreme robots act on which of v1/v2/v3 are
/// occupied; non-extreme robots drop straight down only when both lower
/// diagonals are occupied and nothing sits above. Move targets are always
/// downward, and extreme robots only ever move onto occupied vertices.
inline Decision decide(const View& v) {
    if (is_extreme(v)) {
        const NamedPositions n = named_positions(v);
        const bool on_v1 = v[n.v1];
        const bool on_v2 = n.v2 && v[*n.v2];
        const bool on_v3 = n.v3 && v[*n.v3];
        if (!on_v1 && !on_v2 && !on_v3) return Decision::terminate();
        if (on_v3 && !on_v2) return Decision::stay();
        if (on_v1 && !on_v3 && !on_v2) return Decision::move(n.v1);
        if (on_v2) return Decision::move(on_v1 && !on_v3 ? n.v1 : *n.v2);
        return Decision::stay();  // unreachable
    }
    const bool clear_above = !v[Direction::Up] && !v[Direction::UpLeft] &&
                             !v[Direction::UpRight];
    if (clear_above && v[Direction::DownLeft] && v[Direction::DownRight]) {
        return Decision::move(Direction::Down);
    }
    return Decision::stay();
}

/// Where a robot ends up this round: its decision plus the global target
/// vertex (unchanged for Stay and Terminate).
struct MoveResolution {
    Action action = Action::Stay;
    GridPoint target;
};

inline MoveResolution destination(const Configuration& c, int id) {
    const View v = local_view(c, id);
    const Decision dec = decide(v);
    const GridPoint at = c.position(id);
    if (dec.action != Action::Move) return {dec.action, at};
    return {Action::Move, step_towards(at, globalize(dec.target, c.chirality(id)))};
}

}  // namespace trigather
