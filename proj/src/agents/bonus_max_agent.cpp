#include "rlx/agents/bonus_max_agent.hpp"

#include <sstream>

#include "rlx/selection.hpp"

namespace rlx {

BonusMaxAgent::BonusMaxAgent(BonusMaxConfig config) : config_(config) {}

void BonusMaxAgent::new_episode(const Observation& initial, std::uint64_t episode_seed) {
    rng_.reseed(episode_seed);
    trace_.clear();
    enabled_[initial.state] = initial.actions;
}

ActionKey BonusMaxAgent::pick(const Observation& obs) {
    return epsilon_greedy_pick(q_, obs.state, obs.actions, config_.epsilon, rng_);
}

void BonusMaxAgent::record_step(const Observation& from, const ActionKey& action,
                                const Observation& to, double /*reward*/) {
    trace_.push_back({from.state, action, to.state});
    enabled_[to.state] = to.actions;
}

void BonusMaxAgent::process_episode() {
    const double alpha = config_.alpha;
    const double gamma = config_.gamma;
    for (std::size_t i = trace_.size(); i-- > 0;) {
        const TraceStep& step = trace_[i];
        std::uint64_t t = v_.increment(step.state, step.action);
        double bonus = 1.0 / static_cast<double>(t);
        double target;
        if (i + 1 < trace_.size()) {
            double future = q_.max_over(step.next_state, enabled_at(step.next_state));
            target = std::max(bonus, gamma * future);
        } else {
            target = std::max(bonus, 0.0);
        }
        double q = q_.get(step.state, step.action);
        q_.set(step.state, step.action, (1.0 - alpha) * q + alpha * target);
    }
}

std::span<const ActionKey> BonusMaxAgent::enabled_at(const StateKey& s) const {
    auto it = enabled_.find(s);
    if (it == enabled_.end()) return {};
    return it->second;
}

std::string BonusMaxAgent::dump_tables() const {
    std::ostringstream out;
    out << "# qtable 1\n";
    q_.dump(out);
    out << "# visits 1\n";
    v_.dump(out);
    return out.str();
}

}  // namespace rlx
