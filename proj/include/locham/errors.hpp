#pragma once

#include <stdexcept>
#include <string>

namespace locham {

/// Instance exceeds an exhaustive or state-vector size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative solver hit its iteration cap before meeting tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace locham
