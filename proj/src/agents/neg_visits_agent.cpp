#include "rlx/agents/neg_visits_agent.hpp"

#include <sstream>

#include "rlx/selection.hpp"

namespace rlx {

NegVisitsAgent::NegVisitsAgent(NegVisitsConfig config) : config_(config) {}

void NegVisitsAgent::new_episode(const Observation&, std::uint64_t episode_seed) {
    rng_.reseed(episode_seed);
}

ActionKey NegVisitsAgent::pick(const Observation& obs) {
    return softmax_pick(q_, obs.state, obs.actions, rng_);
}

void NegVisitsAgent::record_step(const Observation& from, const ActionKey& action,
                                 const Observation& to, double /*reward*/) {
    std::uint64_t visits = ++state_visits_[to.state];
    double r = -static_cast<double>(visits);
    double future = q_.max_over(to.state, to.actions);
    double q = q_.get(from.state, action);
    q_.set(from.state, action,
           (1.0 - config_.alpha) * q + config_.alpha * (r + config_.gamma * future));
}

std::uint64_t NegVisitsAgent::state_visits(const StateKey& s) const {
    auto it = state_visits_.find(s);
    return it == state_visits_.end() ? 0 : it->second;
}

std::string NegVisitsAgent::dump_tables() const {
    std::ostringstream out;
    out << "# qtable 1\n";
    q_.dump(out);
    return out.str();
}

}  // namespace rlx
