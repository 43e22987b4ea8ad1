#pragma once

#include <stdexcept>
#include <string>

namespace beamfusion {

// Bad or inconsistent scenario configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Coincident BS/UAV positions and similar ill-posed geometry.
class DegenerateGeometryError : public std::invalid_argument {
 public:
  explicit DegenerateGeometryError(const std::string& what) : std::invalid_argument(what) {}
};

// Fisher information too ill-conditioned to invert into a usable CRB.
class DegenerateInformationError : public std::runtime_error {
 public:
  explicit DegenerateInformationError(const std::string& what) : std::runtime_error(what) {}
};

// Factorization/solve failures and other numerical breakdowns (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Covariance blow-up past the configured trace bound.
class FilterDivergenceError : public NumericalError {
 public:
  explicit FilterDivergenceError(const std::string& what) : NumericalError(what) {}
};

}  // namespace beamfusion
