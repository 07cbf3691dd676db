#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gvqe {

// Precondition violation: bad density, dimension mismatch, malformed input, ...
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured cap (e.g. dense reconstruction size).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares fit could not be computed (rank-deficient design, ...).
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Optimizer failure; carries the point at which the objective misbehaved.
class OptimizerError : public std::runtime_error {
  public:
    OptimizerError(const std::string& what, std::vector<double> point)
        : std::runtime_error(what), point_(std::move(point)) {}

    const std::vector<double>& point() const noexcept { return point_; }

  private:
    std::vector<double> point_;
};

}  // namespace gvqe
