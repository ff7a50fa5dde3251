#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "rlx/keys.hpp"
#include "rlx/rng.hpp"
#include "rlx/tables.hpp"

namespace rlx {

inline const ActionKey& uniform_pick(std::span<const ActionKey> actions, Rng& rng) {
    if (actions.empty()) throw std::invalid_argument("no enabled actions");
    return actions[rng.below(actions.size())];
}

// Argmax by value; ties broken by lowest action key so greedy choices are
// deterministic.
template <typename QFn>
const ActionKey& greedy_pick(QFn&& qvalue, std::span<const ActionKey> actions) {
    if (actions.empty()) throw std::invalid_argument("no enabled actions");
    const ActionKey* best = &actions[0];
    double best_q = qvalue(actions[0]);
    for (std::size_t i = 1; i < actions.size(); ++i) {
        double q = qvalue(actions[i]);
        if (q > best_q || (q == best_q && actions[i] < *best)) {
            best = &actions[i];
            best_q = q;
        }
    }
    return *best;
}

// With probability epsilon a uniform action, otherwise the greedy argmax.
// Always consumes exactly one u01 draw for the epsilon test (plus one more
// for the random branch), so agents with equal epsilon share RNG streams.
template <typename QFn>
const ActionKey& epsilon_greedy_pick(QFn&& qvalue, std::span<const ActionKey> actions,
                                     double epsilon, Rng& rng) {
    if (actions.empty()) throw std::invalid_argument("no enabled actions");
    double x = rng.u01();
    if (x < epsilon) return uniform_pick(actions, rng);
    return greedy_pick(qvalue, actions);
}

inline const ActionKey& epsilon_greedy_pick(const QTable& q, const StateKey& s,
                                            std::span<const ActionKey> actions,
                                            double epsilon, Rng& rng) {
    return epsilon_greedy_pick([&](const ActionKey& a) { return q.get(s, a); },
                               actions, epsilon, rng);
}

// Samples action a with probability exp(Q(s,a)) / sum_a' exp(Q(s,a')).
// Max-subtraction keeps the weights finite for arbitrarily spread values.
template <typename QFn>
const ActionKey& softmax_pick(QFn&& qvalue, std::span<const ActionKey> actions, Rng& rng) {
    if (actions.empty()) throw std::invalid_argument("no enabled actions");
    double max_q = qvalue(actions[0]);
    for (std::size_t i = 1; i < actions.size(); ++i) {
        max_q = std::max(max_q, qvalue(actions[i]));
    }
    double total = 0.0;
    for (const auto& a : actions) total += std::exp(qvalue(a) - max_q);
    double x = rng.u01() * total;
    double acc = 0.0;
    for (const auto& a : actions) {
        acc += std::exp(qvalue(a) - max_q);
        if (x < acc) return a;
    }
    return actions.back();
}

inline const ActionKey& softmax_pick(const QTable& q, const StateKey& s,
                                     std::span<const ActionKey> actions, Rng& rng) {
    return softmax_pick([&](const ActionKey& a) { return q.get(s, a); }, actions, rng);
}

}  // namespace rlx
