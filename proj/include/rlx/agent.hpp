#pragma once

#include <cstdint>
#include <string>

#include "rlx/env.hpp"

namespace rlx {

// Episodic exploration policy. The experiment loop calls, per episode:
// new_episode once, then pick / record_step once per environment step, then
// process_episode once.
class Agent {
public:
    virtual ~Agent() = default;

    // episode_seed is derived from the run seed and the episode index, so a
    // single episode can be replayed in isolation.
    virtual void new_episode(const Observation& initial, std::uint64_t episode_seed) = 0;

    virtual ActionKey pick(const Observation& obs) = 0;

    // `to.actions` carries the actions enabled at the new state; value
    // updates that need max_a' Q(s', a') read the enabled set from here.
    virtual void record_step(const Observation& from, const ActionKey& action,
                             const Observation& to, double reward) = 0;

    virtual void process_episode() = 0;

    // Sorted text dump of the agent's value/visit tables, for snapshot
    // comparisons. Empty for agents that keep no tables.
    virtual std::string dump_tables() const { return {}; }
};

}  // namespace rlx
