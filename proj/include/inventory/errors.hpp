#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace inventory {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Thrown when an operation's precondition is not met by its input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t budget)
        : std::runtime_error(what), budget_(budget) {}

    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

}  // namespace inventory
