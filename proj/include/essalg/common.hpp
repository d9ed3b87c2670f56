#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace essalg {

/// Bad user input: malformed files, mismatched variables, violated preconditions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured budget was exhausted. `budget` names which one.
struct ResourceError : std::runtime_error {
    std::string budget;
    ResourceError(std::string budget_name, const std::string& what)
        : std::runtime_error(what), budget(std::move(budget_name)) {}
};

/// Internal invariant violation; reaching this is a bug, not a user error.
struct MathError : std::logic_error {
    explicit MathError(const std::string& what) : std::logic_error(what) {}
};

/// Budgets for the Buchberger engine and the bounded rewriting completion.
struct Budget {
    std::uint32_t max_degree = 40;
    std::uint64_t max_pairs = 1'000'000;
};

struct BudgetUsage {
    std::uint32_t max_degree_seen = 0;
    std::uint64_t pairs_processed = 0;

    void see_degree(std::uint32_t d) {
        if (d > max_degree_seen) max_degree_seen = d;
    }
};

}  // namespace essalg
