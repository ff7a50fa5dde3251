#include "rlx/agents/waypoint_agent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rlx/selection.hpp"

namespace rlx {

WaypointAgent::WaypointAgent(PredicateSequence sequence, WaypointConfig config)
    : sequence_(std::move(sequence)), config_(config), progress_(&sequence_) {
    if (sequence_.predicates.empty()) {
        throw std::invalid_argument("waypoint sequence needs at least the true predicate");
    }
    q_.resize(sequence_.predicates.size(), QTable(1.0));
    v_.resize(sequence_.predicates.size());
}

void WaypointAgent::new_episode(const Observation& initial, std::uint64_t episode_seed) {
    rng_.reseed(episode_seed);
    trace_.clear();
    progress_.start_episode(initial.snapshot);
    enabled_[initial.state] = initial.actions;
}

ActionKey WaypointAgent::pick(const Observation& obs) {
    const QTable& q = q_[static_cast<std::size_t>(progress_.active() - 1)];
    return epsilon_greedy_pick(q, obs.state, obs.actions, config_.epsilon, rng_);
}

void WaypointAgent::record_step(const Observation& from, const ActionKey& action,
                                const Observation& to, double /*reward*/) {
    int p = progress_.active();
    int p_next = progress_.on_step(to.snapshot);
    trace_.push_back({from.state, action, to.state, p, p_next});
    enabled_[to.state] = to.actions;
}

void WaypointAgent::process_episode() {
    const double alpha = config_.alpha;
    const double gamma = config_.gamma;
    const int n = sequence_.size();

    // First locate the step whose pre-state already sits in the target space.
    bool reached_final = false;
    std::size_t reached_step = 0;
    for (std::size_t i = 0; i < trace_.size(); ++i) {
        if (trace_[i].active_predicate == n) {
            reached_final = true;
            reached_step = i;
            break;
        }
    }

    for (std::size_t i = trace_.size(); i-- > 0;) {
        const TraceStep& step = trace_[i];
        QTable& q = q_[static_cast<std::size_t>(step.active_predicate - 1)];
        VisitTable& v = v_[static_cast<std::size_t>(step.active_predicate - 1)];

        std::uint64_t t = v.increment(step.state, step.action);
        double bonus = 1.0 / static_cast<double>(t);

        double target;
        if (step.active_predicate == step.next_active_predicate ||
            step.active_predicate == n) {
            if (i + 1 < trace_.size()) {
                double future = q.max_over(step.next_state, enabled_at(step.next_state));
                target = std::max(bonus, gamma * future);
            } else {
                target = std::max(bonus, 0.0);
            }
        } else {
            double prog = step.next_active_predicate > step.active_predicate
                              ? config_.prog_reward
                              : 0.0;
            // The reach bonus only rewards progress toward a future target
            // visit: steps at or past reached_step get none.
            double final_r = 0.0;
            if (reached_final && i < reached_step) {
                double d = static_cast<double>(reached_step - i - 1);
                final_r = std::pow(gamma, d) * config_.final_reward;
            }
            target = std::max(bonus, gamma * (prog + final_r));
        }

        double old_q = q.get(step.state, step.action);
        q.set(step.state, step.action, (1.0 - alpha) * old_q + alpha * target);
    }
}

std::span<const ActionKey> WaypointAgent::enabled_at(const StateKey& s) const {
    auto it = enabled_.find(s);
    if (it == enabled_.end()) return {};
    return it->second;
}

QTable& WaypointAgent::q_table(int predicate_index) {
    return q_.at(static_cast<std::size_t>(predicate_index - 1));
}

const QTable& WaypointAgent::q_table(int predicate_index) const {
    return q_.at(static_cast<std::size_t>(predicate_index - 1));
}

VisitTable& WaypointAgent::visit_table(int predicate_index) {
    return v_.at(static_cast<std::size_t>(predicate_index - 1));
}

const VisitTable& WaypointAgent::visit_table(int predicate_index) const {
    return v_.at(static_cast<std::size_t>(predicate_index - 1));
}

std::string WaypointAgent::dump_tables() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < q_.size(); ++i) {
        out << "# qtable " << (i + 1) << "\n";
        q_[i].dump(out);
    }
    for (std::size_t i = 0; i < v_.size(); ++i) {
        out << "# visits " << (i + 1) << "\n";
        v_[i].dump(out);
    }
    return out.str();
}

}  // namespace rlx
