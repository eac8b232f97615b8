#pragma once

#include <stdexcept>
#include <string>

namespace oinv {

// Enumeration or canonicalization size guard tripped.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Work estimate for an evaluation exceeds the configured budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace oinv
