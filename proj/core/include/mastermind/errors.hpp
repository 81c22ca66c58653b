// errors.hpp -- failure categories used across the library

#pragma once

#include <stdexcept>
#include <string>

namespace mastermind {

/// A strategy or harness contract was broken (wrong guess length, memory
/// overflow, undecodable state).  Always a bug, never an input problem.
class ContractViolationError : public std::logic_error {
public:
    explicit ContractViolationError(const std::string &what) : std::logic_error(what) {}
};

/// A storage string failed to decode: record offsets off a boundary,
/// contributions out of range, non-integral reference sums.
class LayoutCorruptionError : public std::logic_error {
public:
    explicit LayoutCorruptionError(const std::string &what) : std::logic_error(what) {}
};

/// A brute-force enumeration would exceed the configured candidate budget.
class EnumerationBudgetError : public std::runtime_error {
public:
    explicit EnumerationBudgetError(const std::string &what) : std::runtime_error(what) {}
};

/// No block layout fits the requested dimensions.
class InfeasibleLayoutError : public std::runtime_error {
public:
    explicit InfeasibleLayoutError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace mastermind
