// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace mortar
{

namespace
{
std::atomic<int> thread_count{1};
}

void set_num_threads(int n)
{
  thread_count = std::max(1, n);
}

int num_threads()
{
  return thread_count;
}

void parallel_for(int n, const std::function<void(int)> &body)
{
  const int nt = std::min(num_threads(), std::max(n, 1));
  if (nt <= 1)
  {
    for (int i = 0; i < n; i++)
    {
      body(i);
    }
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(nt);
  for (int w = 0; w < nt; w++)
  {
    workers.emplace_back(
        [&, w]
        {
          try
          {
            // Interleaved assignment balances triangular loops.
            for (int i = w; i < n; i += nt)
            {
              body(i);
            }
          }
          catch (...)
          {
            errors[w] = std::current_exception();
          }
        });
  }
  for (auto &t : workers)
  {
    t.join();
  }
  for (auto &e : errors)
  {
    if (e)
    {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace mortar
