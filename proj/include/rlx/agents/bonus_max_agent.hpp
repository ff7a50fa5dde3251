#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rlx/agent.hpp"
#include "rlx/rng.hpp"
#include "rlx/tables.hpp"

namespace rlx {

struct BonusMaxConfig {
    double alpha = 0.2;
    double gamma = 0.95;
    double epsilon = 0.05;
};

// Count-based exploration with optimistic initialization. Q starts at 1 for
// every pair; each processed visit of (s, a) earns a bonus of 1/t where t is
// the visit count, and updates propagate backwards over the episode trace
// with max(bonus, gamma * max_a' Q(s', a')) in place of the usual sum.
// All stored Q values stay in [0, 1].
class BonusMaxAgent : public Agent {
public:
    explicit BonusMaxAgent(BonusMaxConfig config = {});

    void new_episode(const Observation& initial, std::uint64_t episode_seed) override;
    ActionKey pick(const Observation& obs) override;
    void record_step(const Observation& from, const ActionKey& action,
                     const Observation& to, double reward) override;
    void process_episode() override;

    std::string dump_tables() const override;

    QTable& q_table() { return q_; }
    const QTable& q_table() const { return q_; }
    VisitTable& visit_table() { return v_; }
    const VisitTable& visit_table() const { return v_; }

    // Actions last observed enabled at a state; feeds max_a' Q(s', a').
    std::span<const ActionKey> enabled_at(const StateKey& s) const;

private:
    struct TraceStep {
        StateKey state;
        ActionKey action;
        StateKey next_state;
    };

    BonusMaxConfig config_;
    QTable q_{1.0};
    VisitTable v_;
    Rng rng_{0};
    std::vector<TraceStep> trace_;
    std::unordered_map<StateKey, std::vector<ActionKey>> enabled_;
};

}  // namespace rlx
