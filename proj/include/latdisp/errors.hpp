#pragma once

#include <stdexcept>
#include <string>

namespace latdisp {

// Bad input: wrong dimension, singular matrix, malformed file, unmet
// precondition.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A size limit (enumeration candidates, solver point count, grid resolution)
// would be exceeded.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant failed at run time. Indicates a bug or a wrong
// admissibility certificate, never bad user input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace latdisp
