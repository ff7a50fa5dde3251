#pragma once

#include <string>
#include <unordered_map>

#include "rlx/agent.hpp"
#include "rlx/rng.hpp"
#include "rlx/tables.hpp"

namespace rlx {

struct NegVisitsConfig {
    double alpha = 0.3;
    double gamma = 0.7;
};

// Punishment-based baseline: the reward for a step that reaches state s' is
// the negation of the visit count of s', applied with the standard additive
// Q-learning rule at every step. Picks actions by softmax over the Q row.
// With zero initialization the stored values never leave (-inf, 0].
class NegVisitsAgent : public Agent {
public:
    explicit NegVisitsAgent(NegVisitsConfig config = {});

    void new_episode(const Observation& initial, std::uint64_t episode_seed) override;
    ActionKey pick(const Observation& obs) override;
    void record_step(const Observation& from, const ActionKey& action,
                     const Observation& to, double reward) override;
    void process_episode() override {}

    std::string dump_tables() const override;

    QTable& q_table() { return q_; }
    const QTable& q_table() const { return q_; }
    std::uint64_t state_visits(const StateKey& s) const;

private:
    NegVisitsConfig config_;
    QTable q_{0.0};
    std::unordered_map<StateKey, std::uint64_t> state_visits_;
    Rng rng_{0};
};

}  // namespace rlx
