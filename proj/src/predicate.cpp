#include "rlx/predicate.hpp"

namespace rlx {

Predicate operator&&(const Predicate& p, const Predicate& q) {
    return Predicate("(" + p.name() + " AND " + q.name() + ")",
                     [p, q](const Snapshot& s) { return p(s) && q(s); });
}

Predicate operator||(const Predicate& p, const Predicate& q) {
    return Predicate("(" + p.name() + " OR " + q.name() + ")",
                     [p, q](const Snapshot& s) { return p(s) || q(s); });
}

Predicate operator!(const Predicate& p) {
    return Predicate("(NOT " + p.name() + ")",
                     [p](const Snapshot& s) { return !p(s); });
}

int active_predicate(const PredicateSequence& seq, const Snapshot& state) {
    for (int i = seq.size(); i >= 2; --i) {
        if (seq.predicates[static_cast<std::size_t>(i - 1)](state)) return i;
    }
    return 1;
}

void PredicateProgress::start_episode(const Snapshot* initial) {
    reached_ = false;
    active_ = scan(initial);
    // The latch is only ever set by on_step: an initial state that already
    // satisfies pred_n does not count as reached.
}

int PredicateProgress::on_step(const Snapshot* next) {
    int next_active;
    if (!reached_) {
        next_active = scan(next);
        if (seq_ && next_active == seq_->size() && seq_->one_time) reached_ = true;
    } else {
        next_active = seq_->size();
    }
    active_ = next_active;
    return next_active;
}

int PredicateProgress::scan(const Snapshot* s) const {
    if (!seq_ || !s) return 1;
    return active_predicate(*seq_, *s);
}

}  // namespace rlx
