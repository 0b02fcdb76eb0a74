#pragma once

#include <stdexcept>
#include <string>

namespace nka {

// Bad user-supplied data: unparseable documents, malformed tables,
// non-covering subcomplex pairs, missing required entries.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation does not hold (zero argument to a
// valuation, defect above the allowed bound, non-invariant cochain, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A descriptor violates its structural invariants or carries flags that
// cannot be resolved for the requested computation.
struct descriptor_error : std::runtime_error {
    explicit descriptor_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested enumeration exceeds the configured budget.  Never silently
// degraded; the caller must shrink the instance or raise the budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nka
