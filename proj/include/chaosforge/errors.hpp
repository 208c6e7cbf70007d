#pragma once

#include <stdexcept>

namespace chaosforge {

// Incompatible tensor dimensions or slot counts.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite entries where finite values are required.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Contraction counts outside the admissible range.
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact-moment request beyond the supported total polynomial degree.
struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chaosforge
