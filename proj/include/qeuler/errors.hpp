#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qeuler {

/// An enumeration oracle was asked for more objects than its budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t requested, std::uint64_t budget)
        : std::runtime_error(what + ": " + std::to_string(requested) + " exceeds budget " +
                             std::to_string(budget)),
          requested_(requested),
          budget_(budget) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t requested_;
    std::uint64_t budget_;
};

/// A cache document is malformed or has an incompatible version.
class CacheFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qeuler
