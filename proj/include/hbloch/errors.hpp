#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hbloch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction or call parameters (rejected before any evaluation).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Jacobian is not positive at a sample that requires sense preservation.
class NotSensePreserving : public Error {
 public:
  NotSensePreserving(std::complex<double> where, double jacobian);
  std::complex<double> where() const { return where_; }
  double jacobian() const { return jacobian_; }

 private:
  std::complex<double> where_;
  double jacobian_;
};

/// h'(z) = 0, so g'/h' is undefined.
class UndefinedDilatation : public Error {
 public:
  explicit UndefinedDilatation(std::complex<double> where);
  std::complex<double> where() const { return where_; }

 private:
  std::complex<double> where_;
};

/// A sampled inner map left the disk or violated Schwarz-Pick.
class InvalidInnerMap : public Error {
 public:
  using Error::Error;
};

/// Bracketing failure in the radius solver.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace hbloch
