#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>

#include "rlx/keys.hpp"

namespace rlx {

// Sparse (state, action) -> value map. Reading an absent entry yields the
// default value without inserting anything.
class QTable {
public:
    explicit QTable(double default_value = 0.0) : default_(default_value) {}

    double default_value() const { return default_; }

    double get(const StateKey& s, const ActionKey& a) const;
    void set(const StateKey& s, const ActionKey& a, double value);

    // max over the given actions of get(s, a); absent entries count as the
    // default. Returns 0 for an empty action span.
    double max_over(const StateKey& s, std::span<const ActionKey> actions) const;

    std::size_t size() const { return entries_; }

    // Sorted "<state>\t<action>\t<value>" lines, one per stored entry.
    void dump(std::ostream& out) const;

    template <typename F>
    void for_each(F f) const {
        for (const auto& [state, row] : rows_) {
            for (const auto& [action, value] : row) f(state, action, value);
        }
    }

private:
    using Row = std::unordered_map<ActionKey, double>;

    double default_;
    std::size_t entries_ = 0;
    std::unordered_map<StateKey, Row> rows_;
};

// Visit counter over (state, action) pairs; counts are monotone.
class VisitTable {
public:
    std::uint64_t get(const StateKey& s, const ActionKey& a) const;
    std::uint64_t increment(const StateKey& s, const ActionKey& a);
    void set(const StateKey& s, const ActionKey& a, std::uint64_t count);

    std::uint64_t total() const { return total_; }
    std::size_t size() const { return entries_; }

    void dump(std::ostream& out) const;

    template <typename F>
    void for_each(F f) const {
        for (const auto& [state, row] : rows_) {
            for (const auto& [action, value] : row) f(state, action, value);
        }
    }

private:
    using Row = std::unordered_map<ActionKey, std::uint64_t>;

    std::size_t entries_ = 0;
    std::uint64_t total_ = 0;
    std::unordered_map<StateKey, Row> rows_;
};

}  // namespace rlx
