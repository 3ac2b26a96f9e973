#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rosel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A 1-based index or rank fell outside its valid range.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Malformed or empty input source.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An allocation would push the workspace meter past its budget.
/// Signals a space-bound violation, never a recoverable condition.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string label, std::uint64_t requested, std::uint64_t budget)
        : Error("workspace budget exceeded (" + label + ", requested " + std::to_string(requested) +
                " bits, budget " + std::to_string(budget) + " bits)"),
          label_(std::move(label)), requested_(requested), budget_(budget) {}

    const std::string& label() const noexcept { return label_; }
    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::string label_;
    std::uint64_t requested_;
    std::uint64_t budget_;
};

/// Misuse of an API (double release, pushing an empty level, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// An algorithm parameter (such as the bit budget) is outside the supported range.
class ParameterError : public Error {
public:
    using Error::Error;
};

}  // namespace rosel
