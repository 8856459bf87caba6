// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/matrix_market.hpp"

#include <fstream>
#include <iomanip>

namespace mortar
{

namespace
{

std::ofstream open(const std::string &path, long rows, long cols, long nnz)
{
  std::ofstream out(path);
  if (!out)
  {
    throw Error("cannot write " + path);
  }
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << rows << ' ' << cols << ' ' << nnz << '\n';
  out << std::setprecision(17);
  return out;
}

}  // namespace

void write_matrix_market(const std::string &path, const CSparse &A)
{
  auto out = open(path, A.rows(), A.cols(), A.nonZeros());
  for (int j = 0; j < A.outerSize(); j++)
  {
    for (CSparse::InnerIterator it(A, j); it; ++it)
    {
      out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value().real() << ' '
          << it.value().imag() << '\n';
    }
  }
}

void write_matrix_market(const std::string &path, const CMatrix &A)
{
  auto out = open(path, A.rows(), A.cols(), A.rows() * A.cols());
  for (long j = 0; j < A.cols(); j++)
  {
    for (long i = 0; i < A.rows(); i++)
    {
      out << i + 1 << ' ' << j + 1 << ' ' << A(i, j).real() << ' ' << A(i, j).imag() << '\n';
    }
  }
}

}  // namespace mortar
