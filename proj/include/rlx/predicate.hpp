#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rlx/snapshot.hpp"

namespace rlx {

// Named pure boolean function over a system snapshot.
class Predicate {
public:
    using Fn = std::function<bool(const Snapshot&)>;

    Predicate() = default;
    Predicate(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    bool operator()(const Snapshot& s) const { return fn_(s); }
    const std::string& name() const { return name_; }
    bool valid() const { return static_cast<bool>(fn_); }

    // The constant-true predicate that heads every sequence.
    static Predicate always() {
        return Predicate("true", [](const Snapshot&) { return true; });
    }

private:
    std::string name_;
    Fn fn_;
};

Predicate operator&&(const Predicate& p, const Predicate& q);
Predicate operator||(const Predicate& p, const Predicate& q);
Predicate operator!(const Predicate& p);

// Ordered waypoint chain pred_1..pred_n; pred_1 is constant true and pred_n
// defines the target space. With one_time set, reaching pred_n latches: all
// later states of the episode count as target states.
struct PredicateSequence {
    std::vector<Predicate> predicates;
    bool one_time = true;

    int size() const { return static_cast<int>(predicates.size()); }
};

// Highest 1-based index whose predicate holds on the state; pred_1 is assumed
// true, so the scan never misses.
int active_predicate(const PredicateSequence& seq, const Snapshot& state);

// Tracks the active predicate across an episode, including the one_time
// latch. Shared by the waypoint agent and the harness-side coverage
// annotation so the two can never disagree.
class PredicateProgress {
public:
    PredicateProgress() = default;
    explicit PredicateProgress(const PredicateSequence* seq) : seq_(seq) {}

    void start_episode(const Snapshot* initial);

    // Advances to the next state and returns its active predicate index.
    int on_step(const Snapshot* next);

    int active() const { return active_; }
    bool reached() const { return reached_; }

private:
    int scan(const Snapshot* s) const;

    const PredicateSequence* seq_ = nullptr;
    int active_ = 1;
    bool reached_ = false;
};

}  // namespace rlx
