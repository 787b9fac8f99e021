#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "trigather/rng.hpp"

namespace trigather {

/// Activation-set source for a run. Every emitted set is a nonempty,
/// sorted, duplicate-free subset of {0..n-1}.
///
/// Strategies:
///  - fsync: all robots every round.
///  - round_robin(k): ids in cyclic batches of k; one full cycle per epoch.
///  - random_fair(seed, p, W): each robot independently with probability p;
///    any robot idle for W-1 consecutive rounds is force-activated, so every
///    window of W rounds activates every robot at least once. W = 2n when 0.
///  - scripted(sets): replays the given sets; the run ends when they run out.
class Scheduler {
public:
    static Scheduler fsync() { return Scheduler(Kind::Fsync); }

    static Scheduler round_robin(int batch) {
        if (batch < 1) throw std::invalid_argument("round-robin batch must be >= 1");
        Scheduler s(Kind::RoundRobin);
        s.batch_ = batch;
        return s;
    }

    static Scheduler random_fair(std::uint64_t seed, double p = 0.5, int window = 0) {
        if (!(p > 0.0 && p <= 1.0)) {
            throw std::invalid_argument("activation probability must be in (0, 1]");
        }
        if (window < 0) throw std::invalid_argument("fairness window must be >= 0");
        Scheduler s(Kind::RandomFair);
        s.seed_ = seed;
        s.prob_ = p;
        s.window_ = window;
        return s;
    }

    static Scheduler scripted(std::vector<std::vector<int>> sets) {
        Scheduler s(Kind::Scripted);
        s.script_ = std::move(sets);
        return s;
    }

    /// Activation set for the next round, or nullopt when a script has run
    /// out. n is the robot count and must stay fixed across a run.
    std::optional<std::vector<int>> next(int n) {
        if (n < 1) throw std::invalid_argument("scheduler needs at least one robot");
        switch (kind_) {
            case Kind::Fsync: {
                std::vector<int> all(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
                return all;
            }
            case Kind::RoundRobin: {
                std::vector<int> set;
                for (int i = 0; i < batch_; ++i) {
                    set.push_back(cursor_);
                    cursor_ = (cursor_ + 1) % n;
                    if (batch_ >= n && i + 1 == n) break;
                }
                std::sort(set.begin(), set.end());
                set.erase(std::unique(set.begin(), set.end()), set.end());
                return set;
            }
            case Kind::RandomFair: {
                if (!rng_) rng_.emplace(seed_);
                if (idle_.size() != static_cast<std::size_t>(n)) {
                    idle_.assign(static_cast<std::size_t>(n), 0);
                }
                const int w = window_ > 0 ? window_ : 2 * n;
                std::vector<int> set;
                for (int i = 0; i < n; ++i) {
                    const bool drawn = rng_->next_double() < prob_;
                    if (drawn || idle_[static_cast<std::size_t>(i)] >= w - 1) {
                        set.push_back(i);
                    }
                }
                if (set.empty()) {
                    // keep the set nonempty: wake the longest-idle robot
                    int pick = 0;
                    for (int i = 1; i < n; ++i) {
                        if (idle_[static_cast<std::size_t>(i)] > idle_[static_cast<std::size_t>(pick)]) pick = i;
                    }
                    set.push_back(pick);
                }
                for (int i = 0; i < n; ++i) ++idle_[static_cast<std::size_t>(i)];
                for (int i : set) idle_[static_cast<std::size_t>(i)] = 0;
                return set;
            }
            case Kind::Scripted: {
                if (script_pos_ >= script_.size()) return std::nullopt;
                std::vector<int> set = script_[script_pos_++];
                std::sort(set.begin(), set.end());
                set.erase(std::unique(set.begin(), set.end()), set.end());
                if (set.empty() || set.front() < 0 || set.back() >= n) {
                    throw std::invalid_argument("scripted activation set " +
                                                std::to_string(script_pos_) +
                                                " is empty or out of range");
                }
                return set;
            }
        }
        return std::nullopt;  // unreachable
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::Fsync: return "fsync";
            case Kind::RoundRobin: return "rr:" + std::to_string(batch_);
            case Kind::RandomFair: {
                std::string p = std::to_string(prob_);
                p.erase(p.find_last_not_of('0') + 1);
                if (!p.empty() && p.back() == '.') p.pop_back();
                return "random:" + std::to_string(seed_) + ":" + p + ":" +
                       std::to_string(window_);
            }
            case Kind::Scripted: return "script";
        }
        return "?";
    }

    std::uint64_t seed() const { return seed_; }

private:
    enum class Kind { Fsync, RoundRobin, RandomFair, Scripted };

    explicit Scheduler(Kind k) : kind_(k) {}

    Kind kind_;
    int batch_ = 1;
    int cursor_ = 0;
    std::uint64_t seed_ = 0;
    double prob_ = 0.5;
    int window_ = 0;
    std::optional<SplitMix64> rng_;
    std::vector<int> idle_;
    std::vector<std::vector<int>> script_;
    std::size_t script_pos_ = 0;
};

}  // namespace trigather
