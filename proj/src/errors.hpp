#pragma once

#include <stdexcept>

namespace ringlab {

// Error categories map onto the CLI exit codes: config=2, data=3, numeric=4.
// Plain std::invalid_argument is reserved for API misuse (bad handles,
// out-of-contract arguments) and maps to its own status at the C boundary.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ringlab
