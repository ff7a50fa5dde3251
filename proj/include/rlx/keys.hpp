#pragma once

#include <compare>
#include <functional>
#include <string>

namespace rlx {

// Canonical encoding of an environment state. Equal states must produce
// byte-identical keys: every unordered collection is sorted before it is
// serialized, and symmetry-reduced environments leave process identifiers out.
struct StateKey {
    std::string value;

    auto operator<=>(const StateKey&) const = default;
};

// Canonical encoding of an action. Distinct enabled actions at a state have
// distinct keys; the lexicographic order of keys is the deterministic
// tie-break order used by greedy selection.
struct ActionKey {
    std::string value;

    auto operator<=>(const ActionKey&) const = default;
};

}  // namespace rlx

template <>
struct std::hash<rlx::StateKey> {
    std::size_t operator()(const rlx::StateKey& k) const noexcept {
        return std::hash<std::string>{}(k.value);
    }
};

template <>
struct std::hash<rlx::ActionKey> {
    std::size_t operator()(const rlx::ActionKey& k) const noexcept {
        return std::hash<std::string>{}(k.value);
    }
};
