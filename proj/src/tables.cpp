#include "rlx/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace rlx {

namespace {

// %.17g round-trips doubles exactly, so equal tables dump to equal text.
std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

template <typename Rows, typename Format>
void dump_rows(const Rows& rows, std::ostream& out, Format format) {
    std::vector<std::string> lines;
    for (const auto& [state, row] : rows) {
        for (const auto& [action, value] : row) {
            lines.push_back(state.value + "\t" + action.value + "\t" + format(value));
        }
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) {
        out << line << "\n";
    }
}

}  // namespace

double QTable::get(const StateKey& s, const ActionKey& a) const {
    auto row = rows_.find(s);
    if (row == rows_.end()) return default_;
    auto it = row->second.find(a);
    return it == row->second.end() ? default_ : it->second;
}

void QTable::set(const StateKey& s, const ActionKey& a, double value) {
    auto [it, inserted] = rows_[s].insert_or_assign(a, value);
    (void)it;
    if (inserted) ++entries_;
}

double QTable::max_over(const StateKey& s, std::span<const ActionKey> actions) const {
    if (actions.empty()) return 0.0;
    auto row = rows_.find(s);
    double best = default_;
    if (row == rows_.end()) return best;
    bool first = true;
    for (const auto& a : actions) {
        auto it = row->second.find(a);
        double v = it == row->second.end() ? default_ : it->second;
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

void QTable::dump(std::ostream& out) const {
    dump_rows(rows_, out, format_value);
}

std::uint64_t VisitTable::get(const StateKey& s, const ActionKey& a) const {
    auto row = rows_.find(s);
    if (row == rows_.end()) return 0;
    auto it = row->second.find(a);
    return it == row->second.end() ? 0 : it->second;
}

std::uint64_t VisitTable::increment(const StateKey& s, const ActionKey& a) {
    auto [it, inserted] = rows_[s].try_emplace(a, 0);
    if (inserted) ++entries_;
    ++total_;
    return ++it->second;
}

void VisitTable::set(const StateKey& s, const ActionKey& a, std::uint64_t count) {
    auto [it, inserted] = rows_[s].try_emplace(a, 0);
    if (inserted) ++entries_;
    total_ += count - it->second;
    it->second = count;
}

void VisitTable::dump(std::ostream& out) const {
    dump_rows(rows_, out, [](std::uint64_t v) { return std::to_string(v); });
}

}  // namespace rlx
