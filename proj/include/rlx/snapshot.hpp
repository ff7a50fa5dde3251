#pragma once

namespace rlx {

// Read-only view of a system state, used for predicate evaluation. Concrete
// environments derive their own view type; predicates downcast to the view
// they understand and evaluate to false on anything else.
struct Snapshot {
    virtual ~Snapshot() = default;
};

}  // namespace rlx
