#pragma once

#include "rlx/agent.hpp"
#include "rlx/rng.hpp"
#include "rlx/selection.hpp"

namespace rlx {

// Pure random exploration baseline; keeps no tables.
class RandomAgent : public Agent {
public:
    RandomAgent() : rng_(0) {}

    void new_episode(const Observation&, std::uint64_t episode_seed) override {
        rng_.reseed(episode_seed);
    }

    ActionKey pick(const Observation& obs) override {
        return uniform_pick(obs.actions, rng_);
    }

    void record_step(const Observation&, const ActionKey&, const Observation&,
                     double) override {}

    void process_episode() override {}

private:
    Rng rng_;
};

}  // namespace rlx
