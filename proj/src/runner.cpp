#include "rlx/runner.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "rlx/rng.hpp"

namespace rlx {

RunStats run_experiment(Environment& env, Agent& agent, const RunConfig& config,
                        const PredicateSequence* measure, const EpisodeSink& sink) {
    if (config.episodes < 1) throw std::invalid_argument("episodes must be >= 1");

    PredicateProgress progress(measure);
    RunStats stats;
    const auto start = std::chrono::steady_clock::now();

    for (std::uint64_t k = 1; k <= config.episodes; ++k) {
        if (config.time_budget_seconds) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() >= *config.time_budget_seconds) break;
        }

        Observation obs = env.reset();
        agent.new_episode(obs, derive_seed(config.seed, k));
        if (measure) progress.start_episode(obs.snapshot);

        EpisodeRecord rec;
        rec.episode = k;
        rec.initial_state = obs.state;

        for (std::uint64_t h = 1; h <= config.horizon; ++h) {
            if (obs.actions.empty()) {
                rec.truncated = true;
                break;
            }
            ActionKey action = agent.pick(obs);
            StepResult result = env.step(action);
            agent.record_step(obs, action, result.obs, result.reward);

            int p = 1;
            int p_next = 1;
            if (measure) {
                p = progress.active();
                p_next = progress.on_step(result.obs.snapshot);
            }
            rec.trace.steps.push_back({obs.state, std::move(action), result.obs.state,
                                       p, p_next, result.reward, env.step_notes()});
            ++stats.total_steps;

            obs = std::move(result.obs);
            if (result.done) {
                rec.terminated = true;
                break;
            }
        }

        agent.process_episode();
        rec.steps = rec.trace.steps.size();
        rec.cumulative_steps = stats.total_steps;
        ++stats.episodes;
        if (sink) sink(std::move(rec));
    }
    return stats;
}

std::vector<EpisodeRecord> run_experiment(Environment& env, Agent& agent,
                                          const RunConfig& config,
                                          const PredicateSequence* measure) {
    std::vector<EpisodeRecord> records;
    records.reserve(config.episodes);
    run_experiment(env, agent, config, measure,
                   [&](EpisodeRecord&& rec) { records.push_back(std::move(rec)); });
    return records;
}

}  // namespace rlx
