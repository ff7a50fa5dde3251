#pragma once

#include <functional>
#include <vector>

#include "rlx/agent.hpp"
#include "rlx/env.hpp"
#include "rlx/predicate.hpp"
#include "rlx/trace.hpp"

namespace rlx {

struct RunStats {
    std::uint64_t episodes = 0;
    std::uint64_t total_steps = 0;
};

using EpisodeSink = std::function<void(EpisodeRecord&&)>;

// The episodic exploration loop: for each episode, reset the environment,
// start the agent, then alternate pick / step / record_step up to the
// horizon, and finish with process_episode. Episodes end early when the
// environment reports done or no action is enabled; the optional time budget
// is checked between episodes.
//
// `measure`, when given, annotates every recorded step with the active
// predicate of its pre- and post-state (with one_time latching); agents that
// ignore predicates still get fair target-coverage accounting this way.
RunStats run_experiment(Environment& env, Agent& agent, const RunConfig& config,
                        const PredicateSequence* measure, const EpisodeSink& sink);

// Convenience overload collecting all episode records.
std::vector<EpisodeRecord> run_experiment(Environment& env, Agent& agent,
                                          const RunConfig& config,
                                          const PredicateSequence* measure = nullptr);

}  // namespace rlx
