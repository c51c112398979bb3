#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace lsarc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Invalid problem name, dimension or solver parameter.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An evaluator produced a non-finite value. Carries the offending point.
class EvaluationError : public std::runtime_error {
public:
  EvaluationError(const std::string& what, Vector x)
      : std::runtime_error(what), x_(std::move(x)) {}

  const Vector& point() const { return x_; }

private:
  Vector x_;
};

enum class SolverErrorCode {
  backtracking_stalled,
  singular_system,
  assumption_violated,
};

const char* to_string(SolverErrorCode code);

class SolverError : public std::runtime_error {
public:
  SolverError(SolverErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  SolverErrorCode code() const { return code_; }

private:
  SolverErrorCode code_;
};

inline const char* to_string(SolverErrorCode code) {
  switch (code) {
    case SolverErrorCode::backtracking_stalled: return "backtracking_stalled";
    case SolverErrorCode::singular_system: return "singular_system";
    case SolverErrorCode::assumption_violated: return "assumption_violated";
  }
  return "unknown";
}

}  // namespace lsarc
