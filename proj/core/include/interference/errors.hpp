#pragma once

#include <stdexcept>
#include <string>

namespace interference {

/// Caller misuse: invalid arguments or violated preconditions.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input data, or a computation that failed on otherwise valid input.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// The Riesz weight denominator vanished for some degree.
struct DegenerateWeightError : DataError {
    explicit DegenerateWeightError(const std::string& what) : DataError(what) {}
};

}  // namespace interference
