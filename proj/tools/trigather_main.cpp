// Command-line harness: deterministic runs with trace/SVG export, batch
// statistics against the epoch bounds, and the impossibility / exhaustive
// fairness checks.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>

#include "trigather/trigather.hpp"

namespace {

using namespace trigather;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitExceeded = 3;
constexpr int kExitBudget = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad ") + what + " '" + s + "'");
    }
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad ") + what + " '" + s + "'");
    }
}

Shape parse_shape(const std::string& s) {
    if (s == "line") return Shape::Line;
    if (s == "blob") return Shape::Blob;
    if (s == "staircase") return Shape::Staircase;
    throw UsageError("unknown shape '" + s + "' (expected line, blob or staircase)");
}

/// "shape:n:seed", with TRIGATHER_SEED overriding the seed when set.
Configuration config_from_gen(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw UsageError("--gen expects shape:n:seed");
    const Shape shape = parse_shape(parts[0]);
    const int n = parse_int(parts[1], "robot count");
    std::uint64_t seed = parse_u64(parts[2], "seed");
    if (const char* env = std::getenv("TRIGATHER_SEED")) {
        seed = parse_u64(env, "TRIGATHER_SEED");
    }
    return generate_connected(n, seed, shape);
}

std::vector<std::vector<int>> load_script(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<std::vector<int>> sets;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<int> set;
        int id;
        while (fields >> id) set.push_back(id);
        if (!fields.eof()) {
            throw UsageError("script " + path + " line " + std::to_string(lineno) +
                             ": expected robot ids");
        }
        if (!set.empty()) sets.push_back(std::move(set));
    }
    if (sets.empty()) throw UsageError("script " + path + " defines no activation sets");
    return sets;
}

/// "fsync" | "rr:k" | "random:seed[:p[:W]]" | "script:PATH"
Scheduler parse_scheduler(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "fsync" && parts.size() == 1) return Scheduler::fsync();
    if (parts[0] == "rr" && parts.size() == 2) {
        return Scheduler::round_robin(parse_int(parts[1], "round-robin batch"));
    }
    if (parts[0] == "random" && parts.size() >= 2 && parts.size() <= 4) {
        const std::uint64_t seed = parse_u64(parts[1], "scheduler seed");
        double p = 0.5;
        int w = 0;
        if (parts.size() >= 3) {
            try {
                p = std::stod(parts[2]);
            } catch (const std::exception&) {
                throw UsageError("bad activation probability '" + parts[2] + "'");
            }
        }
        if (parts.size() == 4) w = parse_int(parts[3], "fairness window");
        return Scheduler::random_fair(seed, p, w);
    }
    if (parts[0] == "script") {
        if (parts.size() < 2) throw UsageError("--scheduler script:PATH needs a path");
        return Scheduler::scripted(load_script(spec.substr(7)));
    }
    throw UsageError("unknown scheduler '" + spec + "'");
}

int upper_bound_epochs(int n) { return (5 * (n + 1) + 1) / 2; }
int lower_bound_epochs(int n) { return n / 2; }  // ceil((n-1)/2)

int cmd_run(const std::string& config_path, const std::string& gen_spec,
            const std::string& scheduler_spec, int max_rounds,
            const std::string& trace_path, int svg_every,
            const std::string& svg_prefix, const std::string& monitors) {
    if (config_path.empty() == gen_spec.empty()) {
        throw UsageError("exactly one of --config or --gen is required");
    }
    const Configuration c0 =
        config_path.empty() ? config_from_gen(gen_spec) : load_config_file(config_path);

    RunOptions opt;
    opt.max_rounds = max_rounds;
    opt.monitors = monitors == "on";

    Trace trace = run(c0, parse_scheduler(scheduler_spec), opt);

    if (!trace_path.empty()) write_trace_file(trace_path, trace);

    if (svg_every > 0) {
        std::string prefix = svg_prefix;
        if (prefix.empty()) {
            prefix = trace_path.empty() ? "frames" : trace_path;
            const auto dot = prefix.rfind('.');
            if (dot != std::string::npos && dot > prefix.rfind('/') + 1) {
                prefix.erase(dot);
            }
        }
        const BoundingPolygon poly =
            bounding_polygon(smallest_enclosing_rectangle(c0));
        auto frame_name = [&](int round) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "_%04d.svg", round);
            return prefix + buf;
        };
        atomic_write_file(frame_name(0), emit_svg(c0, &poly));
        Configuration frame = c0;
        for (const RoundRecord& rec : trace.records) {
            for (const Move& m : rec.moves) frame.move_robot(m.id, m.to);
            if (rec.round % svg_every == 0 || rec.round == trace.rounds) {
                atomic_write_file(frame_name(rec.round), emit_svg(frame, &poly));
            }
        }
    }

    std::cout << "outcome=" << to_string(trace.outcome) << " rounds=" << trace.rounds
              << " epochs=" << trace.epochs << " n=" << c0.size()
              << " scheduler=" << trace.scheduler_desc << "\n";
    if (trace.outcome == Outcome::MonitorViolation) {
        std::cout << "violation: " << trace.violation_detail << "\n";
        return kExitViolation;
    }
    if (trace.outcome == Outcome::MaxRoundsExceeded) return kExitExceeded;
    return kExitOk;
}

int cmd_stats(const std::string& n_range, int seeds, const std::string& scheduler_spec,
              const std::string& shape_name, bool csv, int max_rounds) {
    const auto bounds = split(n_range, '.');
    if (bounds.size() != 3 || !bounds[1].empty()) {
        throw UsageError("--n-range expects A..B");
    }
    const int n_lo = parse_int(bounds[0], "range start");
    const int n_hi = parse_int(bounds[2], "range end");
    if (n_lo < 1 || n_hi < n_lo) throw UsageError("empty or invalid --n-range");
    if (seeds < 1) throw UsageError("--seeds must be >= 1");
    const Shape shape = parse_shape(shape_name);
    const bool line_shape = shape == Shape::Line;

    bool all_ok = true;
    std::ostringstream table;
    if (csv) {
        table << "n,runs,max_epochs,mean_epochs,bound,ok";
        if (line_shape) table << ",lower_bound,lb_ok";
        table << "\n";
    } else {
        table << "    n  runs  max_ep  mean_ep  bound  ok";
        if (line_shape) table << "  lb  lb_ok";
        table << "\n";
    }

    for (int n = n_lo; n <= n_hi; ++n) {
        int max_epochs = 0;
        long total_epochs = 0;
        int runs = 0;
        bool ok = true, lb_ok = true;
        for (int s = 0; s < seeds; ++s) {
            const auto seed = static_cast<std::uint64_t>(s);
            Configuration c0 = generate_connected(n, seed, shape);
            Scheduler sched = parse_scheduler(scheduler_spec);
            RunOptions opt;
            opt.max_rounds = max_rounds;
            Trace t = run(c0, std::move(sched), opt);
            if (t.outcome != Outcome::Gathered) ok = false;
            max_epochs = std::max(max_epochs, t.epochs);
            total_epochs += t.epochs;
            ++runs;
            if (t.epochs > upper_bound_epochs(n)) ok = false;
            if (line_shape && t.epochs < lower_bound_epochs(n)) lb_ok = false;
        }
        all_ok = all_ok && ok && (!line_shape || lb_ok);
        const double mean = static_cast<double>(total_epochs) / runs;
        char mean_buf[32];
        std::snprintf(mean_buf, sizeof mean_buf, "%.2f", mean);
        if (csv) {
            table << n << ',' << runs << ',' << max_epochs << ',' << mean_buf << ','
                  << upper_bound_epochs(n) << ',' << (ok ? "pass" : "fail");
            if (line_shape) {
                table << ',' << lower_bound_epochs(n) << ',' << (lb_ok ? "pass" : "fail");
            }
            table << "\n";
        } else {
            char row[160];
            std::snprintf(row, sizeof row, "%5d %5d %7d %8s %6d %4s", n, runs,
                          max_epochs, mean_buf, upper_bound_epochs(n),
                          ok ? "pass" : "FAIL");
            table << row;
            if (line_shape) {
                std::snprintf(row, sizeof row, " %3d %6s", lower_bound_epochs(n),
                              lb_ok ? "pass" : "FAIL");
                table << row;
            }
            table << "\n";
        }
    }
    std::cout << table.str();
    return all_ok ? kExitOk : kExitViolation;
}

int cmd_check(const std::string& mode, int n, int window, int horizon,
              const std::string& config_path, int grid_cols, int grid_hrows) {
    if (mode == "impossibility") {
        const DeadlockReport report = symmetry_deadlock_check(horizon);
        int gathered = 0;
        for (const DeadlockRow& row : report.rows) {
            std::cout << "choice=" << row.choice << " fate=" << to_string(row.fate)
                      << " round=" << row.round << "\n";
            if (row.fate == DeadlockRow::Fate::Gathered) ++gathered;
        }
        std::cout << "summary: gathered=" << gathered << "/" << report.rows.size()
                  << "\n";
        return report.any_gathered ? kExitViolation : kExitOk;
    }
    if (mode != "exhaustive") {
        throw UsageError("--mode must be impossibility or exhaustive");
    }

    std::vector<Configuration> configs;
    if (!config_path.empty()) {
        configs.push_back(load_config_file(config_path));
    } else {
        configs = enumerate_connected_configs(n, grid_cols, grid_hrows);
    }
    AdversaryOptions opt;
    opt.fairness_window = window;
    opt.horizon = horizon;

    bool all_gathered = true, clean = true, horizon_hit = false;
    int idx = 0;
    for (const Configuration& c0 : configs) {
        ++idx;
        try {
            const AdversaryReport rep = exhaustive_adversary(c0, opt);
            std::cout << "config " << idx << "/" << configs.size()
                      << ": gathered=" << (rep.all_gathered ? "yes" : "NO")
                      << " monitors=" << (rep.monitors_clean ? "clean" : "VIOLATED")
                      << " max_rounds=" << rep.max_rounds
                      << " max_epochs=" << rep.max_epochs << " states=" << rep.states
                      << "\n";
            if (!rep.all_gathered) {
                all_gathered = false;
                if (rep.failure == "horizon too small") horizon_hit = true;
                std::cout << "  failure: " << rep.failure << "\n";
            }
            clean = clean && rep.monitors_clean;
        } catch (const SearchBudgetExceeded& e) {
            std::cout << "config " << idx << "/" << configs.size()
                      << ": resource budget exceeded: " << e.what() << "\n";
            return kExitBudget;
        }
    }
    if (!clean) return kExitViolation;
    if (!all_gathered) {
        std::cout << (horizon_hit ? "horizon too small\n" : "not all branches gathered\n");
        return horizon_hit ? kExitExceeded : kExitViolation;
    }
    std::cout << "all " << configs.size() << " configurations gather under every fair schedule\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gathering simulator and verification harness for myopic robots "
                 "on the infinite triangular grid"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "simulate one configuration");
    std::string config_path, gen_spec, scheduler_spec = "fsync", trace_path,
                svg_prefix, monitors = "on";
    int max_rounds = 0, svg_every = 0;
    run_cmd->add_option("--config", config_path, "configuration file");
    run_cmd->add_option("--gen", gen_spec, "generate shape:n:seed");
    run_cmd->add_option("--scheduler", scheduler_spec,
                        "fsync | rr:k | random:seed[:p[:W]] | script:PATH");
    run_cmd->add_option("--max-rounds", max_rounds, "round limit (default 10*(n+2))");
    run_cmd->add_option("--trace", trace_path, "write JSONL trace");
    run_cmd->add_option("--svg-every", svg_every, "write an SVG frame every K rounds");
    run_cmd->add_option("--svg-prefix", svg_prefix, "frame filename prefix");
    run_cmd->add_option("--monitors", monitors, "on|off (default on)")
        ->check(CLI::IsMember({"on", "off"}));

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "epoch statistics against the bounds");
    std::string n_range, shape_name = "line", stats_scheduler = "fsync";
    int seeds = 1, stats_max_rounds = 0;
    bool csv = false;
    stats_cmd->add_option("--n-range", n_range, "A..B robot counts")->required();
    stats_cmd->add_option("--seeds", seeds, "seeds per n (default 1)");
    stats_cmd->add_option("--scheduler", stats_scheduler, "scheduler spec");
    stats_cmd->add_option("--shape", shape_name, "line | blob | staircase");
    stats_cmd->add_option("--max-rounds", stats_max_rounds, "round limit per run");
    stats_cmd->add_flag("--csv", csv, "CSV output instead of aligned text");

    // check
    auto* check_cmd = app.add_subcommand("check", "impossibility and exhaustive checks");
    std::string mode;
    int check_n = 3, window = 3, horizon = 0, grid_cols = 3, grid_hrows = 5;
    std::string check_config;
    check_cmd->add_option("--mode", mode, "impossibility | exhaustive")->required();
    check_cmd->add_option("--n", check_n, "robot count for exhaustive enumeration");
    check_cmd->add_option("--window", window, "fairness window");
    check_cmd->add_option("--horizon", horizon, "round horizon");
    check_cmd->add_option("--config", check_config, "explicit initial configuration");
    check_cmd->add_option("--grid-cols", grid_cols, "enumeration window columns");
    check_cmd->add_option("--grid-hrows", grid_hrows, "enumeration window half-rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            return cmd_run(config_path, gen_spec, scheduler_spec, max_rounds,
                           trace_path, svg_every, svg_prefix, monitors);
        }
        if (stats_cmd->parsed()) {
            return cmd_stats(n_range, seeds, stats_scheduler, shape_name, csv,
                             stats_max_rounds);
        }
        if (horizon == 0) horizon = mode == "impossibility" ? 20 : 30;
        return cmd_check(mode, check_n, window, horizon, check_config, grid_cols,
                         grid_hrows);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
