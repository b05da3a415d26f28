#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bregman {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the (primal or dual) domain of a generator, or a
/// numeric argument is outside the range where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: dimension mismatch, bad weights, invalid configuration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A projection or centroid is not unique (flat objective).
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

/// A lifted hyperplane lies strictly below the potential graph.
class EmptySphereError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method stopped without meeting its tolerance. Carries the
/// last iterate and, when the method records one, the whole trace.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Eigen::VectorXd last,
                   std::vector<Eigen::VectorXd> trace = {})
      : Error(what), last_iterate_(std::move(last)), trace_(std::move(trace)) {}

  const Eigen::VectorXd& last_iterate() const noexcept { return last_iterate_; }
  const std::vector<Eigen::VectorXd>& trace() const noexcept { return trace_; }

 private:
  Eigen::VectorXd last_iterate_;
  std::vector<Eigen::VectorXd> trace_;
};

}  // namespace bregman
