#pragma once

// Exact closed-form counts for the rook's graph K_n x K_m and its cyclic orders.
// All arithmetic is checked 64-bit; overflow throws ResourceError.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ekr/errors.hpp"

namespace ekr {

/// Nonnegative exact integer count. Arithmetic never wraps.
class ExactCount {
public:
    constexpr ExactCount() = default;
    constexpr explicit ExactCount(std::uint64_t v) : value_(v) {}

    constexpr std::uint64_t value() const noexcept { return value_; }

    friend ExactCount operator+(ExactCount a, ExactCount b) {
        std::uint64_t out = 0;
        if (__builtin_add_overflow(a.value_, b.value_, &out))
            throw ResourceError("exact count overflow in addition: " + std::to_string(a.value_) + " + " +
                                std::to_string(b.value_));
        return ExactCount{out};
    }

    friend ExactCount operator*(ExactCount a, ExactCount b) {
        std::uint64_t out = 0;
        if (__builtin_mul_overflow(a.value_, b.value_, &out))
            throw ResourceError("exact count overflow in multiplication: " + std::to_string(a.value_) + " * " +
                                std::to_string(b.value_));
        return ExactCount{out};
    }

    ExactCount &operator+=(ExactCount o) { return *this = *this + o; }
    ExactCount &operator*=(ExactCount o) { return *this = *this * o; }

    friend constexpr auto operator<=>(ExactCount, ExactCount) = default;
    friend constexpr bool operator==(ExactCount, ExactCount) = default;
    friend constexpr bool operator==(ExactCount a, std::uint64_t b) { return a.value_ == b; }

    friend std::ostream &operator<<(std::ostream &os, ExactCount c) { return os << c.value_; }

private:
    std::uint64_t value_ = 0;
};

inline void require_nonnegative(long long x, const char *name) {
    if (x < 0)
        throw InputError(std::string(name) + " must be nonnegative, got " + std::to_string(x));
}

inline ExactCount factorial(long long n) {
    require_nonnegative(n, "n");
    ExactCount out{1};
    for (long long i = 2; i <= n; ++i)
        out *= ExactCount{static_cast<std::uint64_t>(i)};
    return out;
}

/// C(n, k); zero when k > n. Multiplicative form keeps every partial product an
/// exact binomial so intermediate overflow happens only when the answer is huge.
inline ExactCount binomial(long long n, long long k) {
    require_nonnegative(n, "n");
    require_nonnegative(k, "k");
    if (k > n)
        return ExactCount{0};
    k = std::min(k, n - k);
    std::uint64_t acc = 1;
    for (long long i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i, with the division exact at each step
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        const std::uint64_t den = static_cast<std::uint64_t>(i);
        const std::uint64_t g = std::gcd(acc, den);
        const std::uint64_t a = acc / g;
        const std::uint64_t b = den / g;
        acc = (ExactCount{a} * ExactCount{num / b}).value();
    }
    return ExactCount{acc};
}

inline void require_dimensions(long long n, long long m) {
    if (n < 1 || m < 1)
        throw InputError("grid dimensions must be positive, got n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
}

/// Number of independent r-sets of K_n x K_m: C(n,r) C(m,r) r!.
inline ExactCount rook_count(long long n, long long m, long long r) {
    require_dimensions(n, m);
    if (r < 1)
        throw InputError("r must be at least 1, got " + std::to_string(r));
    if (r > std::min(n, m))
        return ExactCount{0};
    return binomial(n, r) * binomial(m, r) * factorial(r);
}

/// Size of the star at any vertex: C(n-1,r-1) C(m-1,r-1) (r-1)!.
inline ExactCount rook_star_count(long long n, long long m, long long r) {
    require_dimensions(n, m);
    if (r < 1 || r > std::min(n, m))
        throw InputError("r must lie in 1..min(n,m), got " + std::to_string(r));
    return binomial(n - 1, r - 1) * binomial(m - 1, r - 1) * factorial(r - 1);
}

/// Number of cyclic orders: (n-1)! (m-1)!.
inline ExactCount cyclic_order_count(long long n, long long m) {
    require_dimensions(n, m);
    return factorial(n - 1) * factorial(m - 1);
}

/// Number of cyclic orders in which a fixed independent r-set is an interval:
/// r! (n-r)! (m-r)!.
inline ExactCount interval_occurrence_count(long long n, long long m, long long r) {
    require_dimensions(n, m);
    if (r < 1 || r > std::min(n, m))
        throw InputError("r must lie in 1..min(n,m), got " + std::to_string(r));
    return factorial(r) * factorial(n - r) * factorial(m - r);
}

} // namespace ekr
