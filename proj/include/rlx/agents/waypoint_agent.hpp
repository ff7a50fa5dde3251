#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rlx/agent.hpp"
#include "rlx/predicate.hpp"
#include "rlx/rng.hpp"
#include "rlx/tables.hpp"

namespace rlx {

struct WaypointConfig {
    double alpha = 0.2;
    double gamma = 0.95;
    double epsilon = 0.05;
    double prog_reward = 2.0;   // bonus for moving to a higher-indexed predicate
    double final_reward = 2.0;  // bonus for later reaching the target, discounted
};

// Waypoint-guided exploration. One Q/visit table per predicate in the
// sequence; actions are picked greedily on the table of the active predicate.
// Steps that stay within one predicate get the count-bonus update; steps that
// cross predicates earn progress and (discounted) target-reach rewards.
// Stored Q values stay in [0, max(1, gamma * (prog_reward + final_reward))].
class WaypointAgent : public Agent {
public:
    WaypointAgent(PredicateSequence sequence, WaypointConfig config = {});

    void new_episode(const Observation& initial, std::uint64_t episode_seed) override;
    ActionKey pick(const Observation& obs) override;
    void record_step(const Observation& from, const ActionKey& action,
                     const Observation& to, double reward) override;
    void process_episode() override;

    std::string dump_tables() const override;

    const PredicateSequence& sequence() const { return sequence_; }
    int active() const { return progress_.active(); }
    bool reached() const { return progress_.reached(); }

    QTable& q_table(int predicate_index);              // 1-based
    const QTable& q_table(int predicate_index) const;
    VisitTable& visit_table(int predicate_index);
    const VisitTable& visit_table(int predicate_index) const;

private:
    struct TraceStep {
        StateKey state;
        ActionKey action;
        StateKey next_state;
        int active_predicate;
        int next_active_predicate;
    };

    std::span<const ActionKey> enabled_at(const StateKey& s) const;

    PredicateSequence sequence_;
    WaypointConfig config_;
    std::vector<QTable> q_;       // index i-1 holds the table of pred_i
    std::vector<VisitTable> v_;
    PredicateProgress progress_;
    Rng rng_{0};
    std::vector<TraceStep> trace_;
    std::unordered_map<StateKey, std::vector<ActionKey>> enabled_;
};

}  // namespace rlx
