#pragma once

#include "trigather/config.hpp"
#include "trigather/rng.hpp"

namespace trigather {

enum class Shape { Line, Blob, Staircase };

inline const char* to_string(Shape s) {
    switch (s) {
        case Shape::Line: return "line";
        case Shape::Blob: return "blob";
        case Shape::Staircase: return "staircase";
    }
    return "?";
}

/// Deterministic connected configurations for a given (n, seed, shape):
///  - line: n robots stacked on column 0 at half-rows 0, 2, ..., 2(n-1).
///  - staircase: the diagonal chain (0,0), (1,1), ..., (n-1, n-1).
///  - blob: a connected set grown from the origin by repeatedly occupying a
///    seeded-uniform pick from the frontier; robots get seeded chirality.
/// Line and staircase ignore the seed and use Standard chirality.
inline Configuration generate_connected(int n, std::uint64_t seed, Shape shape) {
    if (n < 1) throw std::invalid_argument("robot count must be >= 1");
    std::vector<Placement> placements;
    switch (shape) {
        case Shape::Line:
            for (int i = 0; i < n; ++i) placements.push_back({{0, 2 * i}, 1});
            break;
        case Shape::Staircase:
            for (int i = 0; i < n; ++i) placements.push_back({{i, i}, 1});
            break;
        case Shape::Blob: {
            SplitMix64 rng(seed);
            std::unordered_set<GridPoint, GridPointHash> chosen;
            std::vector<GridPoint> frontier;  // kept sorted, may hold stale entries
            GridPoint at{0, 0};
            chosen.insert(at);
            placements.push_back({at, 1, rng.next_bool() ? Chirality::Mirrored
                                                         : Chirality::Standard});
            while (static_cast<int>(chosen.size()) < n) {
                for (GridPoint q : neighbors(at)) {
                    if (chosen.find(q) == chosen.end()) frontier.push_back(q);
                }
                std::sort(frontier.begin(), frontier.end());
                frontier.erase(std::unique(frontier.begin(), frontier.end()),
                               frontier.end());
                do {
                    const auto idx = rng.next_below(frontier.size());
                    at = frontier[static_cast<std::size_t>(idx)];
                    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(idx));
                } while (chosen.find(at) != chosen.end());
                chosen.insert(at);
                placements.push_back({at, 1, rng.next_bool() ? Chirality::Mirrored
                                                             : Chirality::Standard});
            }
            break;
        }
    }
    return Configuration::from_placements(placements);
}

}  // namespace trigather
