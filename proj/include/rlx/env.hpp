#pragma once

#include <string>
#include <vector>

#include "rlx/keys.hpp"
#include "rlx/snapshot.hpp"

namespace rlx {

// What the agent sees after reset() or step(): the canonical state key, the
// actions enabled there, and a view of the underlying system for predicate
// evaluation. The snapshot pointer stays valid until the next call into the
// environment; callers must not retain it.
struct Observation {
    StateKey state;
    std::vector<ActionKey> actions;
    const Snapshot* snapshot = nullptr;
};

struct StepResult {
    Observation obs;
    double reward = 0.0;
    bool done = false;
};

class Environment {
public:
    virtual ~Environment() = default;

    // Starts a new episode from the initial state.
    virtual Observation reset() = 0;

    // Performs one transition. The action must be one of the enabled actions
    // of the current observation; anything else is a contract violation and
    // throws std::invalid_argument.
    virtual StepResult step(const ActionKey& action) = 0;

    // Diagnostics attached to the most recent step (e.g. safety-check
    // results). Empty for most environments.
    virtual const std::vector<std::string>& step_notes() const {
        static const std::vector<std::string> none;
        return none;
    }
};

}  // namespace rlx
