// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_TYPES_HPP
#define MORTAR_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace mortar
{

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CSparse = Eigen::SparseMatrix<cplx>;
using RSparse = Eigen::SparseMatrix<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

// Base class for all errors raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
  ParseError(const std::string &what, int line)
    : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {
  }
  int line() const { return line_; }

private:
  int line_;
};

class MeshError : public Error
{
public:
  using Error::Error;
};

class ConfigError : public Error
{
public:
  using Error::Error;
};

// Raised when a factorization detects a (numerically) singular matrix.
class SingularMatrixError : public Error
{
public:
  SingularMatrixError(const std::string &what, double condition_estimate)
    : Error(what + " (condition estimate " + std::to_string(condition_estimate) + ")"),
      condition_(condition_estimate)
  {
  }
  double condition_estimate() const { return condition_; }

private:
  double condition_;
};

}  // namespace mortar

#endif  // MORTAR_TYPES_HPP
