#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "trigather/engine.hpp"
#include "trigather/textio.hpp"

namespace trigather {

/// Trace files are JSON lines: a header object, one object per round, and an
/// outcome footer.
///
///   {"version":1,"n":3,"scheduler":"fsync","seed":0}
///   {"round":1,"active":[0,1,2],"moves":[{"id":2,"from":[0,4],"to":[0,2]}],
///    "metrics":{"e_l":0,"e_r":0,"width_cols":0,"top_hrow":2,"depth_l":2,
///    "depth_r":2},"epoch_boundary":true}
///   {"outcome":"gathered","rounds":2,"epochs":2}
inline std::string trace_to_jsonl(const Trace& trace) {
    using nlohmann::json;
    std::string out;
    json header{{"version", 1},
                {"n", trace.initial.size()},
                {"scheduler", trace.scheduler_desc},
                {"seed", trace.seed}};
    out += header.dump();
    out += '\n';
    for (const RoundRecord& rec : trace.records) {
        json moves = json::array();
        for (const Move& m : rec.moves) {
            moves.push_back(json{{"id", m.id},
                                 {"from", {m.from.col, m.from.hrow}},
                                 {"to", {m.to.col, m.to.hrow}}});
        }
        json line{{"round", rec.round},
                  {"active", rec.active},
                  {"moves", std::move(moves)},
                  {"metrics",
                   {{"e_l", rec.after.e_l},
                    {"e_r", rec.after.e_r},
                    {"width_cols", rec.after.width_cols},
                    {"top_hrow", rec.after.top_hrow},
                    {"depth_l", rec.after.depth_l},
                    {"depth_r", rec.after.depth_r}}},
                  {"epoch_boundary", rec.epoch_boundary}};
        out += line.dump();
        out += '\n';
    }
    json footer{{"outcome", to_string(trace.outcome)},
                {"rounds", trace.rounds},
                {"epochs", trace.epochs}};
    out += footer.dump();
    out += '\n';
    return out;
}

inline void write_trace_file(const std::string& path, const Trace& trace) {
    atomic_write_file(path, trace_to_jsonl(trace));
}

struct ReplayResult {
    bool ok = true;
    std::string detail;
};

/// Re-derives every per-round metrics object by applying the recorded moves
/// to the initial configuration; any field mismatch fails the replay.
inline ReplayResult replay_trace(const Configuration& initial,
                                 std::string_view jsonl) {
    using nlohmann::json;
    Configuration current = initial;
    std::istringstream in{std::string(jsonl)};
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json obj = json::parse(line);
        if (!header_seen) {
            if (obj.value("n", -1) != initial.size()) {
                return {false, "header robot count does not match initial configuration"};
            }
            header_seen = true;
            continue;
        }
        if (obj.contains("outcome")) break;  // footer
        for (const json& mv : obj.at("moves")) {
            const int id = mv.at("id").get<int>();
            const GridPoint from{mv.at("from")[0].get<int>(), mv.at("from")[1].get<int>()};
            const GridPoint to{mv.at("to")[0].get<int>(), mv.at("to")[1].get<int>()};
            if (current.position(id) != from) {
                return {false, "line " + std::to_string(lineno) + ": robot " +
                                   std::to_string(id) + " is at " +
                                   to_string(current.position(id)) + ", trace says " +
                                   to_string(from)};
            }
            current.move_robot(id, to);
        }
        const Metrics m = metrics(current);
        const json& rm = obj.at("metrics");
        const bool match = rm.at("e_l").get<int>() == m.e_l &&
                           rm.at("e_r").get<int>() == m.e_r &&
                           rm.at("width_cols").get<int>() == m.width_cols &&
                           rm.at("top_hrow").get<int>() == m.top_hrow &&
                           rm.at("depth_l").get<int>() == m.depth_l &&
                           rm.at("depth_r").get<int>() == m.depth_r;
        if (!match) {
            return {false, "line " + std::to_string(lineno) +
                               ": replayed metrics differ from recorded metrics"};
        }
    }
    if (!header_seen) return {false, "missing trace header"};
    return {};
}

}  // namespace trigather
