#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rlx/env.hpp"

namespace rlx {

// Position in a chain of 3-D cubes: cube index g, grid coordinates (w, b),
// depth d.
struct CubeState {
    int g = 0;
    int w = 0;
    int b = 0;
    int d = 0;

    auto operator<=>(const CubeState&) const = default;
};

struct CubeDoor {
    int g = 0, w = 0, b = 0;  // source cell, any depth
    CubeState target;         // entry cell in the next cube

    auto operator<=>(const CubeDoor&) const = default;
};

// A chain of `cubes` cubes of width x breadth x depth cells, connected by
// one-way doors.
struct CubeConfig {
    int cubes = 6;
    int width = 10;
    int breadth = 10;
    int depth = 6;
    std::vector<CubeDoor> doors;

    // Doors at (g, 5, 5) leading to (g+1, 0, 0, 0) for every non-final cube.
    static CubeConfig standard();

    // Throws std::invalid_argument on out-of-bounds dimensions or doors, or
    // doors not leading into the next cube.
    void validate() const;

    std::int64_t total_cells() const {
        return static_cast<std::int64_t>(cubes) * width * breadth * depth;
    }
};

// The eight actions, offered at every cell. Moves that would leave the cube
// are no-ops, as is `into` away from a door cell.
std::span<const ActionKey> cube_actions();

CubeState cube_reset();
CubeState cube_step(const CubeConfig& config, const CubeState& state, const ActionKey& action);

enum class CubeAbstraction { Full, DepthErased };

StateKey cube_state_key(const CubeState& s, CubeAbstraction mode);

struct CubeSnapshot : Snapshot {
    CubeState state;
};

// Environment adapter. Tracks concrete per-cell visit counts across the
// whole lifetime of the instance (one instance per trial), independent of
// the configured key abstraction.
class CubeWorld : public Environment {
public:
    explicit CubeWorld(CubeConfig config, CubeAbstraction mode = CubeAbstraction::Full);

    Observation reset() override;
    StepResult step(const ActionKey& action) override;

    const CubeConfig& config() const { return config_; }
    const CubeState& state() const { return state_; }

    // Flat counts indexed by ((g * width + w) * breadth + b) * depth + d.
    const std::vector<std::uint64_t>& visit_counts() const { return visits_; }
    std::uint64_t visits(int g, int w, int b, int d) const;

private:
    Observation observe();
    void record_visit();

    CubeConfig config_;
    CubeAbstraction mode_;
    CubeState state_;
    CubeSnapshot snapshot_;
    std::vector<std::uint64_t> visits_;
};

}  // namespace rlx
