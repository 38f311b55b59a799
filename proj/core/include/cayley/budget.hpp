#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// Upper bound on the number of elements any single enumeration may visit.
struct Budget {
    std::uint64_t max_elements = kDefaultBudget;

    /// Throws BudgetExceeded when `required` (nullopt meaning "overflowed") is over the cap.
    void require(std::optional<std::uint64_t> required, const std::string& what) const {
        if (!required || *required > max_elements) {
            throw BudgetExceeded(what, required.value_or(std::numeric_limits<std::uint64_t>::max()),
                                 max_elements);
        }
    }
};

/// base^exp, or nullopt when the result does not fit in 64 bits.
[[nodiscard]] constexpr std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                                                 std::uint64_t exp) noexcept {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::nullopt;
        }
        result *= base;
    }
    return result;
}

/// Worker count and budget shared by all enumeration oracles.
struct OracleOptions {
    Budget budget{};
    unsigned threads = 1;
};

}  // namespace cayley
