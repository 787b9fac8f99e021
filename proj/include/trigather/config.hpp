#pragma once

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "trigather/grid.hpp"

namespace trigather {

using OccupancyMap = std::unordered_map<GridPoint, int, GridPointHash>;

struct Placement {
    GridPoint at;
    int count = 1;
    Chirality chirality = Chirality::Standard;
};

/// Robot ids mapped to vertices, with derived per-vertex occupancy counts.
/// Robots themselves cannot observe multiplicity; the counts are simulator
/// bookkeeping. Value semantics throughout; an empty configuration cannot be
/// constructed.
class Configuration {
public:
    static Configuration from_placements(const std::vector<Placement>& placements) {
        Configuration c;
        for (const Placement& pl : placements) {
            require_valid(pl.at);
            if (pl.count < 1) {
                throw std::invalid_argument("placement count must be >= 1 at " +
                                            to_string(pl.at));
            }
            for (int i = 0; i < pl.count; ++i) {
                c.robots_.push_back(pl.at);
                c.chiralities_.push_back(pl.chirality);
            }
            c.occupancy_[pl.at] += pl.count;
        }
        if (c.robots_.empty()) {
            throw std::invalid_argument("empty configuration");
        }
        return c;
    }

    int size() const { return static_cast<int>(robots_.size()); }

    GridPoint position(int id) const {
        check_id(id);
        return robots_[static_cast<std::size_t>(id)];
    }

    Chirality chirality(int id) const {
        check_id(id);
        return chiralities_[static_cast<std::size_t>(id)];
    }

    const std::vector<GridPoint>& positions() const { return robots_; }
    const std::vector<Chirality>& chiralities() const { return chiralities_; }
    const OccupancyMap& occupancy() const { return occupancy_; }

    bool occupied(GridPoint p) const { return occupancy_.find(p) != occupancy_.end(); }

    int count_at(GridPoint p) const {
        auto it = occupancy_.find(p);
        return it == occupancy_.end() ? 0 : it->second;
    }

    /// Relocate one robot, keeping occupancy counts consistent.
    void move_robot(int id, GridPoint to) {
        check_id(id);
        require_valid(to);
        GridPoint from = robots_[static_cast<std::size_t>(id)];
        if (from == to) return;
        auto it = occupancy_.find(from);
        if (--it->second == 0) occupancy_.erase(it);
        ++occupancy_[to];
        robots_[static_cast<std::size_t>(id)] = to;
    }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.robots_ == b.robots_ && a.chiralities_ == b.chiralities_;
    }

private:
    Configuration() = default;

    void check_id(int id) const {
        if (id < 0 || id >= size()) {
            throw std::out_of_range("unknown robot id " + std::to_string(id));
        }
    }

    std::vector<GridPoint> robots_;
    std::vector<Chirality> chiralities_;
    OccupancyMap occupancy_;
};

struct VisibilityGraph {
    std::vector<GridPoint> vertices;                    // sorted
    std::vector<std::pair<GridPoint, GridPoint>> edges; // each once, smaller vertex first
};

/// Graph induced on the occupied vertices by 1-hop adjacency.
inline VisibilityGraph visibility_graph(const Configuration& c) {
    VisibilityGraph g;
    g.vertices.reserve(c.occupancy().size());
    for (const auto& [p, count] : c.occupancy()) g.vertices.push_back(p);
    std::sort(g.vertices.begin(), g.vertices.end());
    for (GridPoint u : g.vertices) {
        for (GridPoint v : neighbors(u)) {
            if (u < v && c.occupied(v)) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

inline bool is_connected(const Configuration& c) {
    const OccupancyMap& occ = c.occupancy();
    std::unordered_set<GridPoint, GridPointHash> seen;
    seen.reserve(occ.size() * 2);
    std::vector<GridPoint> stack{occ.begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        GridPoint u = stack.back();
        stack.pop_back();
        for (Direction d : all_directions()) {
            GridPoint v = step_towards(u, d);
            if (occ.find(v) != occ.end() && seen.insert(v).second) {
                stack.push_back(v);
            }
        }
    }
    return seen.size() == occ.size();
}

inline bool is_gathered(const Configuration& c) {
    return c.occupancy().size() == 1;
}

/// Global quantities of a configuration. Distances are exact integers:
/// horizontal ones in columns (one column = sqrt(3)/2 Euclidean), vertical
/// ones in half-units (one half-unit = 1/2 Euclidean).
struct Metrics {
    int e_l = 0;        // leftmost occupied column
    int e_r = 0;        // rightmost occupied column
    int width_cols = 0; // e_r - e_l
    int top_hrow = 0;   // topmost occupied half-row
    int depth_l = 0;    // top_hrow - lowest occupied half-row on e_l
    int depth_r = 0;    // top_hrow - lowest occupied half-row on e_r
    int height_hu = 0;  // top_hrow - lowest occupied half-row overall

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

inline Metrics metrics(const Configuration& c) {
    const OccupancyMap& occ = c.occupancy();
    Metrics m;
    auto first = occ.begin()->first;
    m.e_l = m.e_r = first.col;
    m.top_hrow = first.hrow;
    int bottom = first.hrow;
    for (const auto& [p, count] : occ) {
        m.e_l = std::min(m.e_l, p.col);
        m.e_r = std::max(m.e_r, p.col);
        m.top_hrow = std::max(m.top_hrow, p.hrow);
        bottom = std::min(bottom, p.hrow);
    }
    int low_l = m.top_hrow, low_r = m.top_hrow;
    for (const auto& [p, count] : occ) {
        if (p.col == m.e_l) low_l = std::min(low_l, p.hrow);
        if (p.col == m.e_r) low_r = std::min(low_r, p.hrow);
    }
    m.width_cols = m.e_r - m.e_l;
    m.depth_l = m.top_hrow - low_l;
    m.depth_r = m.top_hrow - low_r;
    m.height_hu = m.top_hrow - bottom;
    return m;
}

/// Smallest enclosing rectangle of a configuration, sides parallel and
/// perpendicular to the agreed axis.
///
/// The raw bounding box can have off-lattice corners; hrow_min is pushed down
/// and hrow_max up by one half-unit to the parity of col_min (columns are
/// never adjusted). The stored corner points are each pushed outward
/// individually where the right column's parity still disagrees, so all four
/// are genuine grid points.
struct Ser {
    int col_min = 0;
    int col_max = 0;
    int hrow_min = 0;
    int hrow_max = 0;
    GridPoint a, b, c, d;  // top-left, bottom-left, bottom-right, top-right

    friend bool operator==(const Ser&, const Ser&) = default;
};

inline Ser smallest_enclosing_rectangle(const Configuration& cfg) {
    const OccupancyMap& occ = cfg.occupancy();
    auto first = occ.begin()->first;
    Ser s;
    s.col_min = s.col_max = first.col;
    s.hrow_min = s.hrow_max = first.hrow;
    for (const auto& [p, count] : occ) {
        s.col_min = std::min(s.col_min, p.col);
        s.col_max = std::max(s.col_max, p.col);
        s.hrow_min = std::min(s.hrow_min, p.hrow);
        s.hrow_max = std::max(s.hrow_max, p.hrow);
    }
    if (((s.col_min ^ s.hrow_max) & 1) != 0) ++s.hrow_max;
    if (((s.col_min ^ s.hrow_min) & 1) != 0) --s.hrow_min;
    s.a = {s.col_min, s.hrow_max};
    s.b = {s.col_min, s.hrow_min};
    const int skew = (s.col_min ^ s.col_max) & 1;
    s.c = {s.col_max, s.hrow_min - skew};
    s.d = {s.col_max, s.hrow_max + skew};
    return s;
}

/// The five-vertex region ABPCDA: the enclosing rectangle extended below its
/// bottom side by an apex with pi/6 base angles. One column to the side costs
/// exactly one half-unit of drop, so containment is an integer test.
struct BoundingPolygon {
    Ser ser;

    /// Euclidean apex, for plotting.
    Vec2 apex() const {
        constexpr double kColPitch = 0.8660254037844386467637231707529362;
        const double mid_col = (ser.col_min + ser.col_max) / 2.0;
        const double drop_hu = (ser.col_max - ser.col_min) / 2.0;
        return {mid_col * kColPitch, (ser.hrow_min - drop_hu) / 2.0};
    }
};

inline BoundingPolygon bounding_polygon(const Ser& ser) { return {ser}; }

inline bool polygon_contains(const BoundingPolygon& poly, GridPoint p) {
    const Ser& s = poly.ser;
    if (p.col < s.col_min || p.col > s.col_max) return false;
    if (p.hrow > s.hrow_max) return false;
    const int slack = std::min(p.col - s.col_min, s.col_max - p.col);
    return p.hrow >= s.hrow_min - slack;
}

}  // namespace trigather
