#pragma once

// Shared aliases, constants and small numeric utilities used across the
// library.  Everything in here is header-only on purpose: these are the
// primitives the hot loops inline.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radlab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Thrown when an input lies outside the mathematical domain of an operation
// (negative measure, non-positive gaussian width, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Thrown when arguments are structurally invalid for the requested operation
// (dimension mismatch, unsupported representation combination, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown when an iterative procedure fails to converge or a computation is
// too ill-conditioned to meet its accuracy contract.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Neumaier variant of compensated summation.  All quadrature accumulations
// go through this so that results do not depend on how a loop might be
// chunked; the summation order is the loop order, full stop.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Complex-valued companion; keeps the two real accumulators in lockstep.
class NeumaierSumC {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_, im_;
};

}  // namespace radlab
