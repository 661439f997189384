#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ekr {

/// Malformed or out-of-contract input (bad labels, non-bijections, invalid files).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size budget or the exact-integer range was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search ran out of nodes or wall-clock time. Carries the best bounds known
/// at the point of abandonment; the result is inconclusive, never a verdict.
class BudgetExceeded : public ResourceError {
public:
    BudgetExceeded(const std::string &what, std::uint64_t lower, std::uint64_t upper)
        : ResourceError(what), lower_bound_(lower), upper_bound_(upper) {}

    std::uint64_t lower_bound() const noexcept { return lower_bound_; }
    std::uint64_t upper_bound() const noexcept { return upper_bound_; }

private:
    std::uint64_t lower_bound_;
    std::uint64_t upper_bound_;
};

} // namespace ekr
