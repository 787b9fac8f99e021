#pragma once

#include <string>
#include <vector>

#include "trigather/config.hpp"
#include "trigather/rule.hpp"
#include "trigather/scheduler.hpp"

namespace trigather {

struct Move {
    int id = 0;
    GridPoint from, to;

    friend bool operator==(const Move&, const Move&) = default;
};

/// One round under snapshot semantics: every activated robot computes its
/// destination from the same start-of-round configuration, then all moves are
/// applied at once. Inactive robots are untouched.
///
/// The optional out-parameters receive the per-robot decisions (aligned with
/// the sorted activation set) and the actual position changes.
inline Configuration step(const Configuration& c, std::vector<int> active,
                          std::vector<Decision>* decisions_out = nullptr,
                          std::vector<Move>* moves_out = nullptr) {
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    if (active.empty()) throw std::invalid_argument("empty activation set");

    std::vector<Decision> decisions;
    std::vector<Move> moves;
    decisions.reserve(active.size());
    for (int id : active) {
        const View v = local_view(c, id);
        const Decision dec = decide(v);
        decisions.push_back(dec);
        if (dec.action == Action::Move) {
            const GridPoint from = c.position(id);
            const GridPoint to =
                step_towards(from, globalize(dec.target, c.chirality(id)));
            moves.push_back({id, from, to});
        }
    }
    Configuration next = c;
    for (const Move& m : moves) next.move_robot(m.id, m.to);
    if (decisions_out) *decisions_out = std::move(decisions);
    if (moves_out) *moves_out = std::move(moves);
    return next;
}

/// Greedy epoch segmentation: an epoch closes at the first round where every
/// robot has been activated at least once since the previous boundary. A
/// trailing partial segment with at least one activation counts as one epoch.
class EpochTracker {
public:
    explicit EpochTracker(int n) : n_(n), seen_(static_cast<std::size_t>(n), false) {}

    /// Returns true when this round closes an epoch.
    bool add_round(const std::vector<int>& active) {
        for (int id : active) {
            if (!seen_[static_cast<std::size_t>(id)]) {
                seen_[static_cast<std::size_t>(id)] = true;
                ++covered_;
            }
        }
        partial_ = partial_ || !active.empty();
        if (covered_ == n_) {
            ++completed_;
            std::fill(seen_.begin(), seen_.end(), false);
            covered_ = 0;
            partial_ = false;
            return true;
        }
        return false;
    }

    int completed() const { return completed_; }
    bool has_partial() const { return partial_; }
    int epochs_counting_partial() const { return completed_ + (partial_ ? 1 : 0); }

private:
    int n_;
    std::vector<bool> seen_;
    int covered_ = 0;
    int completed_ = 0;
    bool partial_ = false;
};

/// Completed epochs in an activation history, counting a trailing partial
/// segment with at least one activation as one.
inline int epoch_count(const std::vector<std::vector<int>>& history, int n) {
    EpochTracker t(n);
    for (const auto& set : history) t.add_round(set);
    return t.epochs_counting_partial();
}

enum class MonitorCode {
    Connectivity,           // visibility graph disconnected after the round
    WidthIncreased,         // width grew
    TopRose,                // topmost layer moved up
    DepthLeftIncreased,     // e_l column unchanged but its depth grew
    DepthRightIncreased,    // e_r column unchanged but its depth grew
    PolygonExited,          // a robot left the initial bounding polygon
    EdgeNonExtremeMoved,    // non-extreme robot on e_l/e_r changed position
    ExtremeMovedOntoEmpty,  // extreme robot moved to a previously empty vertex
    EpochWithoutDescent,    // an epoch completed without the top layer dropping
};

inline const char* to_string(MonitorCode c) {
    switch (c) {
        case MonitorCode::Connectivity: return "connectivity";
        case MonitorCode::WidthIncreased: return "width-increased";
        case MonitorCode::TopRose: return "top-rose";
        case MonitorCode::DepthLeftIncreased: return "depth-left-increased";
        case MonitorCode::DepthRightIncreased: return "depth-right-increased";
        case MonitorCode::PolygonExited: return "polygon-exited";
        case MonitorCode::EdgeNonExtremeMoved: return "edge-non-extreme-moved";
        case MonitorCode::ExtremeMovedOntoEmpty: return "extreme-moved-onto-empty";
        case MonitorCode::EpochWithoutDescent: return "epoch-without-descent";
    }
    return "?";
}

struct Violation {
    MonitorCode code;
    int round = 0;
    std::string detail;
};

/// Per-round executable invariants of the rule. `epoch_boundary` and
/// `top_hrow_at_last_boundary` drive the per-epoch strict-descent check;
/// violations come back as data, never as exceptions.
inline std::vector<Violation> check_round_invariants(
    const Configuration& before, const Configuration& after,
    const std::vector<int>& active, const BoundingPolygon& initial_polygon,
    int round, bool epoch_boundary, int top_hrow_at_last_boundary) {
    std::vector<Violation> out;
    const Metrics mb = metrics(before);
    const Metrics ma = metrics(after);

    if (!is_connected(after)) {
        out.push_back({MonitorCode::Connectivity, round, "visibility graph disconnected"});
    }
    if (ma.width_cols > mb.width_cols) {
        out.push_back({MonitorCode::WidthIncreased, round,
                       "width " + std::to_string(mb.width_cols) + " -> " +
                           std::to_string(ma.width_cols)});
    }
    if (ma.top_hrow > mb.top_hrow) {
        out.push_back({MonitorCode::TopRose, round,
                       "top hrow " + std::to_string(mb.top_hrow) + " -> " +
                           std::to_string(ma.top_hrow)});
    }
    if (ma.e_l == mb.e_l && ma.depth_l > mb.depth_l) {
        out.push_back({MonitorCode::DepthLeftIncreased, round,
                       "d(e_l) " + std::to_string(mb.depth_l) + " -> " +
                           std::to_string(ma.depth_l)});
    }
    if (ma.e_r == mb.e_r && ma.depth_r > mb.depth_r) {
        out.push_back({MonitorCode::DepthRightIncreased, round,
                       "d(e_r) " + std::to_string(mb.depth_r) + " -> " +
                           std::to_string(ma.depth_r)});
    }
    for (const auto& [p, count] : after.occupancy()) {
        if (!polygon_contains(initial_polygon, p)) {
            out.push_back({MonitorCode::PolygonExited, round,
                           "occupied vertex " + to_string(p) + " outside polygon"});
        }
    }
    for (int id : active) {
        const GridPoint from = before.position(id);
        const GridPoint to = after.position(id);
        const bool extreme = is_extreme(local_view(before, id));
        if (!extreme && (from.col == mb.e_l || from.col == mb.e_r) && from != to) {
            out.push_back({MonitorCode::EdgeNonExtremeMoved, round,
                           "robot " + std::to_string(id) + " at " + to_string(from)});
        }
        if (extreme && from != to && !before.occupied(to)) {
            out.push_back({MonitorCode::ExtremeMovedOntoEmpty, round,
                           "robot " + std::to_string(id) + " to " + to_string(to)});
        }
    }
    if (epoch_boundary && !is_gathered(after) &&
        ma.top_hrow >= top_hrow_at_last_boundary) {
        out.push_back({MonitorCode::EpochWithoutDescent, round,
                       "top hrow still " + std::to_string(ma.top_hrow)});
    }
    return out;
}

/// Stateful wrapper tying the per-round checks to a run: remembers the
/// initial bounding polygon and the top layer at the last epoch boundary.
class RunMonitor {
public:
    explicit RunMonitor(const Configuration& initial)
        : polygon_(bounding_polygon(smallest_enclosing_rectangle(initial))),
          top_at_boundary_(metrics(initial).top_hrow) {}

    const BoundingPolygon& polygon() const { return polygon_; }

    std::vector<Violation> on_round(const Configuration& before,
                                    const Configuration& after,
                                    const std::vector<int>& active, int round,
                                    bool epoch_boundary) {
        auto v = check_round_invariants(before, after, active, polygon_, round,
                                        epoch_boundary, top_at_boundary_);
        if (epoch_boundary) top_at_boundary_ = metrics(after).top_hrow;
        return v;
    }

private:
    BoundingPolygon polygon_;
    int top_at_boundary_;
};

struct RoundRecord {
    int round = 0;
    std::vector<int> active;
    std::vector<Decision> decisions;  // aligned with active
    std::vector<Move> moves;          // actual position changes only
    Metrics after;
    std::vector<Violation> violations;
    bool epoch_boundary = false;
};

enum class Outcome { Gathered, MaxRoundsExceeded, MonitorViolation };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Gathered: return "gathered";
        case Outcome::MaxRoundsExceeded: return "max_rounds_exceeded";
        case Outcome::MonitorViolation: return "monitor_violation";
    }
    return "?";
}

struct Trace {
    explicit Trace(Configuration init) : initial(std::move(init)) {}

    Configuration initial;
    std::string scheduler_desc;
    std::uint64_t seed = 0;
    std::vector<RoundRecord> records;
    Outcome outcome = Outcome::MaxRoundsExceeded;
    int rounds = 0;
    int epochs = 0;
    std::string violation_detail;
    int swap_count = 0;  // simultaneous adjacent position exchanges (diagnostic)
};

struct RunOptions {
    int max_rounds = 0;  // <= 0: default 10 * (n + 2)
    bool monitors = true;
};

inline int default_max_rounds(int n) { return 10 * (n + 2); }

/// Execute rounds until gathered, a monitor violation, the round limit, or
/// script exhaustion. The initial configuration must be connected.
inline Trace run(const Configuration& c0, Scheduler scheduler,
                 const RunOptions& opt = {}) {
    if (!is_connected(c0)) {
        throw std::invalid_argument("disconnected initial configuration");
    }
    const int n = c0.size();
    const int max_rounds = opt.max_rounds > 0 ? opt.max_rounds : default_max_rounds(n);

    Trace trace(c0);
    trace.scheduler_desc = scheduler.describe();
    trace.seed = scheduler.seed();

    if (is_gathered(c0)) {
        trace.outcome = Outcome::Gathered;
        return trace;
    }

    Configuration current = c0;
    EpochTracker epochs(n);
    RunMonitor monitor(c0);

    for (int round = 1; round <= max_rounds; ++round) {
        auto active = scheduler.next(n);
        if (!active) break;  // script exhausted

        std::sort(active->begin(), active->end());
        active->erase(std::unique(active->begin(), active->end()), active->end());

        RoundRecord rec;
        rec.round = round;
        rec.active = *active;
        Configuration next = step(current, *active, &rec.decisions, &rec.moves);
        rec.epoch_boundary = epochs.add_round(rec.active);
        rec.after = metrics(next);

        for (std::size_t i = 0; i < rec.moves.size(); ++i) {
            for (std::size_t j = i + 1; j < rec.moves.size(); ++j) {
                if (rec.moves[i].to == rec.moves[j].from &&
                    rec.moves[j].to == rec.moves[i].from) {
                    ++trace.swap_count;
                }
            }
        }

        if (opt.monitors) {
            rec.violations = monitor.on_round(current, next, rec.active, round,
                                              rec.epoch_boundary);
        }
        const bool violated = !rec.violations.empty();
        if (violated) {
            trace.violation_detail = std::string(to_string(rec.violations.front().code)) +
                                     " at round " + std::to_string(round) + ": " +
                                     rec.violations.front().detail;
        }
        current = std::move(next);
        trace.records.push_back(std::move(rec));
        trace.rounds = round;
        trace.epochs = epochs.epochs_counting_partial();

        if (violated) {
            trace.outcome = Outcome::MonitorViolation;
            return trace;
        }
        if (is_gathered(current)) {
            trace.outcome = Outcome::Gathered;
            return trace;
        }
    }
    trace.outcome = Outcome::MaxRoundsExceeded;
    trace.epochs = epochs.epochs_counting_partial();
    return trace;
}

}  // namespace trigather
