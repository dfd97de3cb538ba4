#pragma once

#include <stdexcept>
#include <string>

namespace lcggm {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments, malformed configuration, violated preconditions.
class config_error : public error {
 public:
  using error::error;
};

// Solver breakdown, non-convergence treated as fatal, loss of definiteness,
// infeasible subproblems.
class numerical_error : public error {
 public:
  using error::error;
};

// File system and parsing failures.
class io_error : public error {
 public:
  using error::error;
};

}  // namespace lcggm
