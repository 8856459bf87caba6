// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_PARALLEL_HPP
#define MORTAR_PARALLEL_HPP

#include <functional>

namespace mortar
{

// Number of worker threads used by assembly loops. 1 (the default) runs every loop inline,
// which is the reference mode for bit-exact results.
void set_num_threads(int n);
int num_threads();

// Calls body(i) for 0 <= i < n, split into contiguous chunks over num_threads() threads.
// The body must only write to locations owned by index i.
void parallel_for(int n, const std::function<void(int)> &body);

}  // namespace mortar

#endif  // MORTAR_PARALLEL_HPP
