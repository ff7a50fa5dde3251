#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "rlx/agents/random_agent.hpp"
#include "rlx/rng.hpp"
#include "rlx/runner.hpp"
#include "rlx/selection.hpp"
#include "rlx/tables.hpp"

using namespace rlx;

namespace {

StateKey S(const std::string& s) { return StateKey{s}; }
ActionKey A(const std::string& a) { return ActionKey{a}; }

// Deterministic chain environment over states 0..size-1 with two actions:
// "fwd" moves +1 (clamped), "stay" does nothing. Terminates at the last
// state when `terminal` is set.
class ChainEnv : public Environment {
public:
    ChainEnv(int size, bool terminal) : size_(size), terminal_(terminal) {}

    Observation reset() override {
        pos_ = 0;
        return observe();
    }

    StepResult step(const ActionKey& action) override {
        if (action.value != "fwd" && action.value != "stay") {
            throw std::invalid_argument("disabled action: " + action.value);
        }
        if (action.value == "fwd" && pos_ + 1 < size_) ++pos_;
        bool done = terminal_ && pos_ == size_ - 1;
        return {observe(), 0.0, done};
    }

    int steps_taken = 0;

private:
    Observation observe() const {
        return {S("s" + std::to_string(pos_)), {A("fwd"), A("stay")}, nullptr};
    }

    int size_;
    bool terminal_;
    int pos_ = 0;
};

// Environment that stops offering actions after a fixed number of steps.
class DeadEndEnv : public Environment {
public:
    explicit DeadEndEnv(int live_steps) : live_steps_(live_steps) {}

    Observation reset() override {
        taken_ = 0;
        return observe();
    }

    StepResult step(const ActionKey&) override {
        ++taken_;
        return {observe(), 0.0, false};
    }

private:
    Observation observe() const {
        Observation obs{S("d" + std::to_string(taken_)), {}, nullptr};
        if (taken_ < live_steps_) obs.actions = {A("go")};
        return obs;
    }

    int live_steps_;
    int taken_ = 0;
};

// Counts lifecycle calls to verify the loop contract.
class CountingAgent : public Agent {
public:
    void new_episode(const Observation&, std::uint64_t) override { ++episodes; }
    ActionKey pick(const Observation& obs) override {
        ++picks;
        return obs.actions.front();
    }
    void record_step(const Observation&, const ActionKey&, const Observation&,
                     double) override {
        ++records;
    }
    void process_episode() override { ++processed; }

    int episodes = 0, picks = 0, records = 0, processed = 0;
};

}  // namespace

TEST_CASE("q table defaults and isolation") {
    QTable q(1.0);
    CHECK(q.get(S("x"), A("a")) == 1.0);
    CHECK(q.size() == 0);  // lookups never insert

    q.set(S("x"), A("a"), 0.5);
    CHECK(q.get(S("x"), A("a")) == 0.5);
    CHECK(q.get(S("x"), A("b")) == 1.0);
    CHECK(q.get(S("y"), A("a")) == 1.0);
    CHECK(q.size() == 1);
}

TEST_CASE("q table max over enabled actions uses defaults for absent entries") {
    QTable q(1.0);
    q.set(S("s"), A("a"), 0.2);
    std::vector<ActionKey> actions{A("a"), A("b")};
    CHECK(q.max_over(S("s"), actions) == 1.0);  // b unseen, reads as 1
    q.set(S("s"), A("b"), 0.3);
    CHECK(q.max_over(S("s"), actions) == 0.3);
    CHECK(q.max_over(S("s"), {}) == 0.0);
}

TEST_CASE("visit table counts") {
    VisitTable v;
    CHECK(v.get(S("s"), A("a")) == 0);
    CHECK(v.increment(S("s"), A("a")) == 1);
    CHECK(v.increment(S("s"), A("a")) == 2);
    CHECK(v.get(S("s"), A("a")) == 2);
    CHECK(v.total() == 2);
}

TEST_CASE("epsilon greedy: pure greedy picks the max") {
    QTable q(1.0);
    q.set(S("s"), A("a"), 0.2);
    q.set(S("s"), A("b"), 0.9);
    std::vector<ActionKey> actions{A("a"), A("b")};
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        CHECK(epsilon_greedy_pick(q, S("s"), actions, 0.0, rng).value == "b");
    }
}

TEST_CASE("epsilon greedy: ties break to the lowest key") {
    QTable q(1.0);
    q.set(S("s"), A("a"), 0.5);
    q.set(S("s"), A("b"), 0.5);
    std::vector<ActionKey> actions{A("b"), A("a")};  // order must not matter
    Rng rng(7);
    CHECK(epsilon_greedy_pick(q, S("s"), actions, 0.0, rng).value == "a");
}

TEST_CASE("epsilon greedy: epsilon=1 is uniform within 3 sigma") {
    QTable q(1.0);
    std::vector<ActionKey> actions{A("a"), A("b"), A("c"), A("d")};
    Rng rng(123);
    std::map<std::string, int> counts;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        counts[epsilon_greedy_pick(q, S("s"), actions, 1.0, rng).value]++;
    }
    double p = 0.25;
    double band = 3.0 * std::sqrt(p * (1 - p) / n) * n;
    for (const auto& [name, c] : counts) {
        INFO(name, " -> ", c);
        CHECK(std::abs(c - p * n) <= band);
    }
}

TEST_CASE("epsilon greedy: empty action set is an error") {
    QTable q(1.0);
    Rng rng(1);
    CHECK_THROWS_AS(epsilon_greedy_pick(q, S("s"), {}, 0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(softmax_pick(q, S("s"), {}, rng), std::invalid_argument);
    CHECK_THROWS_AS(uniform_pick({}, rng), std::invalid_argument);
}

TEST_CASE("softmax: equal values are uniform within 3 sigma") {
    QTable q(0.0);
    std::vector<ActionKey> actions{A("a"), A("b"), A("c")};
    Rng rng(99);
    std::map<std::string, int> counts;
    const int n = 10000;
    for (int i = 0; i < n; ++i) counts[softmax_pick(q, S("s"), actions, rng).value]++;
    double p = 1.0 / 3.0;
    double band = 3.0 * std::sqrt(p * (1 - p) / n) * n;
    for (const auto& [name, c] : counts) {
        INFO(name, " -> ", c);
        CHECK(std::abs(c - p * n) <= band);
    }
}

TEST_CASE("softmax: closed-form ratio") {
    // P(b) = e^{ln 3} / (e^0 + e^{ln 3}) = 3/4.
    QTable q(0.0);
    q.set(S("s"), A("a"), 0.0);
    q.set(S("s"), A("b"), std::log(3.0));
    std::vector<ActionKey> actions{A("a"), A("b")};
    Rng rng(2024);
    int b = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        if (softmax_pick(q, S("s"), actions, rng).value == "b") ++b;
    }
    double p = 0.75;
    double band = 3.0 * std::sqrt(p * (1 - p) / n) * n;
    CHECK(std::abs(b - p * n) <= band);
}

TEST_CASE("softmax: extreme spread stays stable") {
    QTable q(0.0);
    q.set(S("s"), A("a"), -1000.0);
    q.set(S("s"), A("b"), 0.0);
    std::vector<ActionKey> actions{A("a"), A("b")};
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        CHECK(softmax_pick(q, S("s"), actions, rng).value == "b");
    }
}

TEST_CASE("derived seeds differ per stream and repeat per (base, stream)") {
    CHECK(derive_seed(42, 1) == derive_seed(42, 1));
    CHECK(derive_seed(42, 1) != derive_seed(42, 2));
    CHECK(derive_seed(42, 1) != derive_seed(43, 1));
}

TEST_CASE("run loop: record once per step, process once per episode") {
    ChainEnv env(10, false);
    CountingAgent agent;
    RunConfig cfg{.episodes = 3, .horizon = 5, .seed = 1};
    auto records = run_experiment(env, agent, cfg);

    CHECK(records.size() == 3);
    CHECK(agent.episodes == 3);
    CHECK(agent.processed == 3);
    CHECK(agent.picks == 15);
    CHECK(agent.records == 15);
    CHECK(records.back().cumulative_steps == 15);
    for (const auto& rec : records) {
        CHECK(rec.steps == 5);
        for (std::size_t i = 0; i + 1 < rec.trace.steps.size(); ++i) {
            CHECK(rec.trace.steps[i].next_state == rec.trace.steps[i + 1].state);
        }
        CHECK(rec.trace.steps.front().state == rec.initial_state);
    }
}

TEST_CASE("run loop: zero-horizon episode still processes") {
    ChainEnv env(3, false);
    CountingAgent agent;
    RunConfig cfg{.episodes = 1, .horizon = 0, .seed = 1};
    auto records = run_experiment(env, agent, cfg);
    CHECK(records.size() == 1);
    CHECK(records[0].steps == 0);
    CHECK(records[0].trace.steps.empty());
    CHECK(agent.processed == 1);
    CHECK(agent.picks == 0);
}

TEST_CASE("run loop: environment termination ends the episode early") {
    ChainEnv env(3, true);
    CountingAgent agent;  // always picks "fwd"
    RunConfig cfg{.episodes = 1, .horizon = 25, .seed = 1};
    auto records = run_experiment(env, agent, cfg);
    CHECK(records[0].steps == 2);
    CHECK(records[0].terminated);
    CHECK(!records[0].truncated);
    CHECK(records[0].cumulative_steps == 2);
}

TEST_CASE("run loop: empty action set truncates the episode") {
    DeadEndEnv env(4);
    CountingAgent agent;
    RunConfig cfg{.episodes = 2, .horizon = 25, .seed = 1};
    auto records = run_experiment(env, agent, cfg);
    REQUIRE(records.size() == 2);
    for (const auto& rec : records) {
        CHECK(rec.steps == 4);
        CHECK(rec.truncated);
        CHECK(!rec.terminated);
    }
    CHECK(agent.processed == 2);
}

TEST_CASE("run loop: identical seeds give byte-identical traces") {
    auto run_once = [] {
        ChainEnv env(6, false);
        RandomAgent agent;
        RunConfig cfg{.episodes = 4, .horizon = 10, .seed = 77};
        return run_experiment(env, agent, cfg);
    };
    auto a = run_once();
    auto b = run_once();
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        REQUIRE(a[k].trace.steps.size() == b[k].trace.steps.size());
        for (std::size_t i = 0; i < a[k].trace.steps.size(); ++i) {
            CHECK(a[k].trace.steps[i].action == b[k].trace.steps[i].action);
            CHECK(a[k].trace.steps[i].next_state == b[k].trace.steps[i].next_state);
        }
    }
}

TEST_CASE("run loop: random agent episodes differ when sub-seeds differ") {
    ChainEnv env(32, false);
    RandomAgent agent;
    RunConfig cfg{.episodes = 2, .horizon = 20, .seed = 9};
    auto records = run_experiment(env, agent, cfg);
    bool any_difference = false;
    for (std::size_t i = 0; i < records[0].trace.steps.size(); ++i) {
        if (records[0].trace.steps[i].action != records[1].trace.steps[i].action) {
            any_difference = true;
            break;
        }
    }
    CHECK(any_difference);
}

TEST_CASE("run loop: disabled action surfaces as contract violation") {
    ChainEnv env(3, false);
    env.reset();
    CHECK_THROWS_AS(env.step(A("sideways")), std::invalid_argument);
}
