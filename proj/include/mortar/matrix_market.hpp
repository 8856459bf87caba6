// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_MATRIX_MARKET_HPP
#define MORTAR_MATRIX_MARKET_HPP

#include <string>

#include "mortar/types.hpp"

namespace mortar
{

// Matrix Market "coordinate complex general" files. Dense matrices are written with all
// entries.
void write_matrix_market(const std::string &path, const CSparse &A);
void write_matrix_market(const std::string &path, const CMatrix &A);

}  // namespace mortar

#endif  // MORTAR_MATRIX_MARKET_HPP
