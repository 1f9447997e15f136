#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace superfock {

/// Complex amplitude vector over the truncated number basis |0>,...,|dim-1>.
template <typename Scalar>
using FockVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

/// Dense operator on the truncated bosonic space.
template <typename Scalar>
using FockOperator = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

/// Numerical contract knobs shared across the library.
struct Tolerances {
  double norm = 1e-10;     // |<v|v> - 1| bound for states labeled normalized
  double tail = 1e-12;     // acceptable coherent-state occupation mass beyond the truncation
  double ortho = 1e-8;     // orthogonality/overlap threshold on trusted blocks
  double unitary = 1e-8;   // ||O^dag O - I||_max on the trusted block
  double cmp = 1e-9;       // cross-formula agreement (two algebraic routes)
  double eig = 1e-8;       // annihilator eigenvalue residuals at dim >= 128, |alpha| <= 2
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidDimensionError : public Error {
 public:
  explicit InvalidDimensionError(const std::string& msg) : Error(msg) {}
};

/// Thrown when the requested truncation cannot hold the state's occupation tail.
/// Carries the smallest dimension that would satisfy the tail tolerance.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& msg, Eigen::Index required)
      : Error(msg + " (required dim >= " + std::to_string(required) + ")"),
        required_dim_(required) {}
  Eigen::Index required_dim() const { return required_dim_; }

 private:
  Eigen::Index required_dim_;
};

class InvalidIndexError : public Error {
 public:
  explicit InvalidIndexError(const std::string& msg) : Error(msg) {}
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& msg) : Error(msg) {}
};

class InvalidStateError : public Error {
 public:
  explicit InvalidStateError(const std::string& msg) : Error(msg) {}
};

/// Moment ratios with vanishing denominator (e.g. Mandel Q of the vacuum).
class UndefinedMomentError : public Error {
 public:
  explicit UndefinedMomentError(const std::string& msg) : Error(msg) {}
};

class NoOrthogonalStatesError : public Error {
 public:
  explicit NoOrthogonalStatesError(const std::string& msg) : Error(msg) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

/// Reduce an angle to the canonical branch [0, 2*pi).
inline double wrap_angle(double phi) {
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

/// Default truncation dimension adequate for displacement amplitude alpha.
template <typename Scalar>
Eigen::Index default_dim(std::complex<Scalar> alpha) {
  const double r = std::abs(alpha);
  const auto needed = static_cast<Eigen::Index>(std::ceil(r * r + 8.0 * r + 16.0));
  return std::max<Eigen::Index>(64, needed);
}

/// Size of the low-index block unaffected by truncation noise; displacement by
/// alpha corrupts roughly the top ceil(4|alpha|+4) rows first.
template <typename Scalar>
Eigen::Index trusted_dim(Eigen::Index dim, std::complex<Scalar> alpha) {
  const auto guard = static_cast<Eigen::Index>(std::ceil(4.0 * std::abs(alpha) + 4.0));
  return std::max<Eigen::Index>(0, dim - guard);
}

}  // namespace superfock
