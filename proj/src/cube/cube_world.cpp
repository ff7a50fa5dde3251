#include "rlx/cube/cube_world.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rlx {

namespace {

const std::array<ActionKey, 8> kActions = {
    ActionKey{"up"},    ActionKey{"down"},  ActionKey{"left"},        ActionKey{"right"},
    ActionKey{"above"}, ActionKey{"below"}, ActionKey{"into"},        ActionKey{"reset_depth"},
};

int clamp(int v, int lo, int hi) { return std::max(lo, std::min(v, hi)); }

}  // namespace

CubeConfig CubeConfig::standard() {
    CubeConfig cfg;
    for (int g = 0; g + 1 < cfg.cubes; ++g) {
        cfg.doors.push_back({g, 5, 5, CubeState{g + 1, 0, 0, 0}});
    }
    return cfg;
}

void CubeConfig::validate() const {
    if (cubes < 1 || width < 1 || breadth < 1 || depth < 1) {
        throw std::invalid_argument("cube dimensions must be positive");
    }
    for (const auto& door : doors) {
        if (door.g < 0 || door.g >= cubes || door.w < 0 || door.w >= width ||
            door.b < 0 || door.b >= breadth) {
            throw std::invalid_argument("door source out of bounds");
        }
        if (door.target.g != door.g + 1 || door.target.g >= cubes) {
            throw std::invalid_argument("door must lead into the next cube");
        }
        if (door.target.w < 0 || door.target.w >= width || door.target.b < 0 ||
            door.target.b >= breadth || door.target.d < 0 || door.target.d >= depth) {
            throw std::invalid_argument("door target out of bounds");
        }
    }
}

std::span<const ActionKey> cube_actions() { return kActions; }

CubeState cube_reset() { return {0, 0, 0, 0}; }

CubeState cube_step(const CubeConfig& config, const CubeState& state, const ActionKey& action) {
    CubeState s = state;
    const std::string& a = action.value;
    if (a == "left") {
        s.w = clamp(s.w - 1, 0, config.width - 1);
    } else if (a == "right") {
        s.w = clamp(s.w + 1, 0, config.width - 1);
    } else if (a == "down") {
        s.b = clamp(s.b - 1, 0, config.breadth - 1);
    } else if (a == "up") {
        s.b = clamp(s.b + 1, 0, config.breadth - 1);
    } else if (a == "above") {
        s.d = clamp(s.d - 1, 0, config.depth - 1);
    } else if (a == "below") {
        s.d = clamp(s.d + 1, 0, config.depth - 1);
    } else if (a == "reset_depth") {
        s.d = 0;
    } else if (a == "into") {
        for (const auto& door : config.doors) {
            if (door.g == s.g && door.w == s.w && door.b == s.b) {
                return door.target;  // active at any depth
            }
        }
    } else {
        throw std::invalid_argument("disabled action: " + a);
    }
    return s;
}

StateKey cube_state_key(const CubeState& s, CubeAbstraction mode) {
    std::string key = std::to_string(s.g) + "," + std::to_string(s.w) + "," +
                      std::to_string(s.b);
    if (mode == CubeAbstraction::Full) {
        key += "," + std::to_string(s.d);
    }
    return StateKey{std::move(key)};
}

CubeWorld::CubeWorld(CubeConfig config, CubeAbstraction mode)
    : config_(std::move(config)), mode_(mode) {
    config_.validate();
    visits_.assign(static_cast<std::size_t>(config_.total_cells()), 0);
}

Observation CubeWorld::reset() {
    state_ = cube_reset();
    record_visit();
    return observe();
}

StepResult CubeWorld::step(const ActionKey& action) {
    state_ = cube_step(config_, state_, action);
    record_visit();
    return {observe(), 0.0, false};
}

Observation CubeWorld::observe() {
    snapshot_.state = state_;
    Observation obs;
    obs.state = cube_state_key(state_, mode_);
    obs.actions.assign(kActions.begin(), kActions.end());
    obs.snapshot = &snapshot_;
    return obs;
}

void CubeWorld::record_visit() {
    std::size_t idx = static_cast<std::size_t>(
        ((static_cast<std::int64_t>(state_.g) * config_.width + state_.w) * config_.breadth +
         state_.b) *
            config_.depth +
        state_.d);
    ++visits_[idx];
}

std::uint64_t CubeWorld::visits(int g, int w, int b, int d) const {
    return visits_[static_cast<std::size_t>(
        ((static_cast<std::int64_t>(g) * config_.width + w) * config_.breadth + b) *
            config_.depth +
        d)];
}

}  // namespace rlx
