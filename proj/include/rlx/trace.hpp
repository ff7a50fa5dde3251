#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlx/keys.hpp"

namespace rlx {

// One recorded transition. The predicate indices are 1-based positions in
// the measurement predicate sequence; runs without one record 1 for both.
struct StepRecord {
    StateKey state;
    ActionKey action;
    StateKey next_state;
    int active_predicate = 1;
    int next_active_predicate = 1;
    double reward = 0.0;
    std::vector<std::string> notes;
};

struct Trace {
    std::vector<StepRecord> steps;
};

struct RunConfig {
    std::uint64_t episodes = 1;
    std::uint64_t horizon = 1;
    std::uint64_t seed = 0;
    std::optional<double> time_budget_seconds;
};

struct EpisodeRecord {
    std::uint64_t episode = 0;  // 1-based
    StateKey initial_state;
    Trace trace;
    std::uint64_t steps = 0;
    bool truncated = false;   // ended early because no action was enabled
    bool terminated = false;  // environment reported done
    std::uint64_t cumulative_steps = 0;  // total steps across the run so far
};

}  // namespace rlx
