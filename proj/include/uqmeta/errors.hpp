// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace uqmeta {

/// Base class for every error raised by this library.
class UqError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public UqError {
public:
  using UqError::UqError;
};

class OutOfDomain : public UqError {
public:
  using UqError::UqError;
};

class NonConvergence : public UqError {
public:
  using UqError::UqError;
};

class SingularSystem : public UqError {
public:
  using UqError::UqError;
};

class RootBracketingFailure : public UqError {
public:
  using UqError::UqError;
};

class DimensionTooLarge : public UqError {
public:
  using UqError::UqError;
};

class SolverFailure : public UqError {
public:
  SolverFailure(int column, const std::string& what)
      : UqError("solver failure at DoE column " + std::to_string(column) + ": " + what),
        column_(column) {}
  int column() const { return column_; }

private:
  int column_;
};

class SingularInterpolationMatrix : public UqError {
public:
  using UqError::UqError;
};

class NegativeEigenvalueBeyondTolerance : public UqError {
public:
  using UqError::UqError;
};

class UnsupportedLevel : public UqError {
public:
  using UqError::UqError;
};

class RuleDistributionMismatch : public UqError {
public:
  using UqError::UqError;
};

class EmptySelection : public UqError {
public:
  using UqError::UqError;
};

class EmptyEstimator : public UqError {
public:
  using UqError::UqError;
};

class MeshMismatch : public UqError {
public:
  using UqError::UqError;
};

class ConfigError : public UqError {
public:
  using UqError::UqError;
};

class IoError : public UqError {
public:
  using UqError::UqError;
};

}  // namespace uqmeta
