#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trigather/engine.hpp"

namespace trigather {

struct SearchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AdversaryOptions {
    int fairness_window = 2;  // every robot active at least once per W rounds
    int horizon = 30;         // max rounds along any branch
    long max_nodes = 5'000'000;
};

struct AdversaryReport {
    bool all_gathered = false;
    bool monitors_clean = true;
    int max_rounds = 0;  // longest branch until gathered
    int max_epochs = 0;  // most epochs on any branch
    long states = 0;     // distinct memoized states
    long nodes = 0;      // DFS expansions
    std::string failure;  // first horizon overrun or monitor violation
};

namespace detail {

/// Lattice translation putting the leftmost occupied column at 0 and the top
/// half-row at 0 or 1 (whichever keeps the shift on the lattice).
inline std::pair<int, int> canonical_shift(const Metrics& m) {
    const int dc = m.e_l;
    const int dh = m.top_hrow - ((m.top_hrow ^ m.e_l) & 1);
    return {dc, dh};
}

struct SearchState {
    std::vector<std::pair<int, int>> pos;  // canonical (col, hrow) per robot
    std::vector<int> idle;                 // consecutive idle rounds per robot
    unsigned coverage = 0;                 // robots active since last boundary
    int rel_top = 0;                       // top drop since last boundary

    friend bool operator<(const SearchState& a, const SearchState& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.idle != b.idle) return a.idle < b.idle;
        if (a.coverage != b.coverage) return a.coverage < b.coverage;
        return a.rel_top < b.rel_top;
    }
};

}  // namespace detail

/// Depth-first enumeration of every fair activation sequence from c0: all
/// nonempty subsets per round, restricted to those that keep every robot's
/// idle streak below the fairness window. States are deduplicated up to
/// translation. Throws SearchBudgetExceeded past max_nodes.
inline AdversaryReport exhaustive_adversary(const Configuration& c0,
                                            const AdversaryOptions& opt) {
    if (!is_connected(c0)) {
        throw std::invalid_argument("disconnected initial configuration");
    }
    if (opt.fairness_window < 1) throw std::invalid_argument("fairness window must be >= 1");
    if (opt.horizon < 1) throw std::invalid_argument("horizon must be >= 1");

    const int n = c0.size();
    if (n > 16) throw std::invalid_argument("exhaustive search supports at most 16 robots");
    const unsigned full = (1u << n) - 1u;
    const BoundingPolygon polygon = bounding_polygon(smallest_enclosing_rectangle(c0));

    AdversaryReport report;
    // memo: state -> (max rounds, max epochs) to gather everything below it
    std::map<detail::SearchState, std::pair<int, int>> memo;

    struct Frame {
        Configuration config;
        detail::SearchState state;
    };

    auto make_state = [&](const Configuration& cfg, const std::vector<int>& idle,
                          unsigned coverage, int rel_top) {
        detail::SearchState s;
        const auto [dc, dh] = detail::canonical_shift(metrics(cfg));
        s.pos.reserve(cfg.positions().size());
        for (GridPoint p : cfg.positions()) s.pos.emplace_back(p.col - dc, p.hrow - dh);
        s.idle = idle;
        s.coverage = coverage;
        s.rel_top = rel_top;
        return s;
    };

    // returns {max rounds, max epochs}; {-1, 0} marks a horizon overrun
    auto dfs = [&](auto&& self, const Configuration& cfg,
                   const detail::SearchState& state,
                   int remaining) -> std::pair<int, int> {
        if (is_gathered(cfg)) return {0, 0};
        auto it = memo.find(state);
        if (it != memo.end() && it->second.first <= remaining) return it->second;
        if (remaining == 0) {
            if (report.failure.empty()) report.failure = "horizon too small";
            return {-1, 0};
        }
        if (++report.nodes > opt.max_nodes) {
            throw SearchBudgetExceeded("exhaustive search exceeded " +
                                       std::to_string(opt.max_nodes) + " nodes");
        }

        unsigned forced = 0;
        for (int i = 0; i < n; ++i) {
            if (state.idle[static_cast<std::size_t>(i)] >= opt.fairness_window - 1) {
                forced |= 1u << i;
            }
        }

        int worst_rounds = 0, worst_epochs = 0;
        const int top_before = metrics(cfg).top_hrow;
        for (unsigned subset = 1; subset <= full; ++subset) {
            if ((subset & forced) != forced) continue;
            std::vector<int> active;
            for (int i = 0; i < n; ++i) {
                if (subset & (1u << i)) active.push_back(i);
            }

            Configuration next = step(cfg, active);
            const unsigned covered = state.coverage | subset;
            const bool boundary = covered == full;
            const int drop = top_before - metrics(next).top_hrow;
            auto violations =
                check_round_invariants(cfg, next, active, polygon, opt.horizon - remaining + 1,
                                       boundary, /*top at last boundary=*/
                                       metrics(cfg).top_hrow + state.rel_top);
            if (!violations.empty()) {
                report.monitors_clean = false;
                if (report.failure.empty()) {
                    report.failure = std::string(to_string(violations.front().code)) + ": " +
                                     violations.front().detail;
                }
                return {-1, 0};
            }

            detail::SearchState ns;
            std::vector<int> idle(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                idle[static_cast<std::size_t>(i)] =
                    (subset & (1u << i)) ? 0 : state.idle[static_cast<std::size_t>(i)] + 1;
            }
            ns = make_state(next, idle, boundary ? 0u : covered,
                            boundary ? 0 : state.rel_top + drop);

            auto sub = self(self, next, ns, remaining - 1);
            if (sub.first < 0) return {-1, 0};
            const int branch_rounds = 1 + sub.first;
            const int branch_epochs =
                is_gathered(next) ? 1 : (boundary ? 1 : 0) + sub.second;
            worst_rounds = std::max(worst_rounds, branch_rounds);
            worst_epochs = std::max(worst_epochs, branch_epochs);
        }
        memo[state] = {worst_rounds, worst_epochs};
        return {worst_rounds, worst_epochs};
    };

    std::vector<int> idle0(static_cast<std::size_t>(n), 0);
    const detail::SearchState root = make_state(c0, idle0, 0u, 0);
    auto result = dfs(dfs, c0, root, opt.horizon);
    report.states = static_cast<long>(memo.size());
    report.all_gathered = result.first >= 0;
    if (report.all_gathered) {
        report.max_rounds = result.first;
        report.max_epochs = result.second;
    }
    return report;
}

/// All connected configurations of n robots on distinct vertices inside a
/// cols x hrows window, one representative per translation class. Robots get
/// Standard chirality and ids in sorted vertex order.
inline std::vector<Configuration> enumerate_connected_configs(int n, int cols,
                                                              int hrows) {
    if (n < 1 || cols < 1 || hrows < 1) {
        throw std::invalid_argument("enumeration window and n must be positive");
    }
    std::vector<GridPoint> verts;
    for (int c = 0; c < cols; ++c) {
        for (int h = 0; h < hrows; ++h) {
            if (((c ^ h) & 1) == 0) verts.push_back({c, h});
        }
    }
    std::sort(verts.begin(), verts.end());

    std::vector<Configuration> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<int> pick;
    auto emit = [&]() {
        std::vector<Placement> placements;
        for (int idx : pick) placements.push_back({verts[static_cast<std::size_t>(idx)], 1});
        Configuration cfg = Configuration::from_placements(placements);
        if (!is_connected(cfg)) return;
        const auto [dc, dh] = detail::canonical_shift(metrics(cfg));
        std::vector<std::pair<int, int>> key;
        for (GridPoint p : cfg.positions()) key.emplace_back(p.col - dc, p.hrow - dh);
        if (seen.insert(key).second) out.push_back(std::move(cfg));
    };
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == n) {
            emit();
            return;
        }
        for (int i = start; i < static_cast<int>(verts.size()); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// The two-robot instance where both frames agree on the axis directions but
/// are rotated 180 degrees from each other: each robot sees the other at the
/// same local direction, so any deterministic rule makes them act
/// point-symmetrically and the vertex-pair midpoint never changes. Classifies
/// all 7 symmetric choices (stay, or move at one of the six angles relative
/// to the seen robot) over the horizon.
struct DeadlockRow {
    std::string choice;
    enum class Fate { Disconnected, FixedPoint, TwoCycle, Gathered, Unresolved } fate =
        Fate::Unresolved;
    int round = 0;
};

inline const char* to_string(DeadlockRow::Fate f) {
    switch (f) {
        case DeadlockRow::Fate::Disconnected: return "disconnected";
        case DeadlockRow::Fate::FixedPoint: return "fixed-point";
        case DeadlockRow::Fate::TwoCycle: return "2-cycle";
        case DeadlockRow::Fate::Gathered: return "gathered";
        case DeadlockRow::Fate::Unresolved: return "unresolved";
    }
    return "?";
}

struct DeadlockReport {
    std::vector<DeadlockRow> rows;
    bool any_gathered = false;
};

inline DeadlockReport symmetry_deadlock_check(int horizon) {
    if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
    DeadlockReport report;

    // the enum order is one sixth-turn per increment
    auto rotate = [](Direction d, int sixths) {
        return static_cast<Direction>((static_cast<int>(d) + sixths) % 6);
    };

    // rotation < 0 encodes the stay choice
    auto classify = [&](const std::string& label, int rotation) {
        DeadlockRow row;
        row.choice = label;
        GridPoint p1{0, 0}, p2{0, 2};  // adjacent, frames point-symmetric
        std::vector<std::pair<GridPoint, GridPoint>> history{{p1, p2}};
        for (int round = 1; round <= horizon; ++round) {
            if (rotation >= 0) {
                // both robots see the other at the same local direction and
                // move at the chosen angle from it; in global terms the moves
                // are exact opposites
                const Direction seen = *direction_between(p1, p2);
                const auto [dc, dh] = offset(rotate(seen, rotation));
                p1 = {p1.col + dc, p1.hrow + dh};
                p2 = {p2.col - dc, p2.hrow - dh};
            }
            if (p1 == p2) {
                row.fate = DeadlockRow::Fate::Gathered;
                row.round = round;
                break;
            }
            if (!direction_between(p1, p2)) {
                row.fate = DeadlockRow::Fate::Disconnected;
                row.round = round;
                break;
            }
            const std::pair<GridPoint, GridPoint> now{p1, p2};
            if (now == history.back()) {
                row.fate = DeadlockRow::Fate::FixedPoint;
                row.round = round;
                break;
            }
            if (history.size() >= 2 && now == history[history.size() - 2]) {
                row.fate = DeadlockRow::Fate::TwoCycle;
                row.round = round;
                break;
            }
            history.push_back(now);
        }
        report.any_gathered = report.any_gathered || row.fate == DeadlockRow::Fate::Gathered;
        report.rows.push_back(std::move(row));
    };

    classify("stay", -1);
    classify("toward", 0);
    for (int k = 1; k < 6; ++k) {
        classify("toward+" + std::to_string(60 * k), k);
    }
    return report;
}

}  // namespace trigather
