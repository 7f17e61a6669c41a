#pragma once

#include <stdexcept>
#include <string>

namespace zenolab {

// Thrown when an iterative scheme (quadrature refinement, root search)
// cannot reach the requested tolerance within its budget.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace zenolab
