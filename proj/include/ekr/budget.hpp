#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace ekr {

/// Limits for the exhaustive searches. Exceeding either is reported as
/// BudgetExceeded; nothing is ever silently truncated.
struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::chrono::milliseconds max_time = std::chrono::hours(1);
};

/// Node/time accounting shared by the workers of one search.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget &b)
        : budget_(b), deadline_(std::chrono::steady_clock::now() + b.max_time) {}

    /// Counts one node; false once either limit is hit. The clock is only
    /// consulted every 1024 nodes.
    bool tick() noexcept {
        if (exhausted_.load(std::memory_order_relaxed))
            return false;
        const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > budget_.max_nodes || ((n & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    bool exhausted() const noexcept { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const noexcept { return nodes_.load(std::memory_order_relaxed); }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

} // namespace ekr
