#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <vector>

#include "chowcob/coeff/smith.hpp"

namespace chowcob {

enum class Exec { serial, parallel };

// f(i) for every i < n.  With Exec::parallel the iterations are spread over
// OpenMP threads; an exception from the lowest failing index is rethrown.
template <class F>
void for_each_index(std::size_t n, Exec ex, F&& f) {
  if (ex == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errs(n);
  const long m = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

// smallest i < n with pred(i), or n.  The parallel version skips indices past
// the best hit found so far, so it returns the same answer as the serial one.
template <class P>
std::size_t find_first(std::size_t n, Exec ex, P&& pred) {
  if (ex == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return n;
  }
  std::atomic<std::size_t> best{n};
  std::vector<std::exception_ptr> errs(n);
  const long m = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < m; ++i) {
    auto u = static_cast<std::size_t>(i);
    if (u >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (pred(u)) {
        std::size_t cur = best.load();
        while (u < cur && !best.compare_exchange_weak(cur, u)) {
        }
      }
    } catch (...) {
      errs[u] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < n && i < best; ++i)
    if (errs[i]) std::rethrow_exception(errs[i]);
  return best;
}

// rank over F_p; the row updates below each pivot run in parallel
std::size_t rank_fp_parallel(FpMatrix M, unsigned p);
inline std::size_t rank_fp_exec(FpMatrix M, unsigned p, Exec ex) {
  return ex == Exec::serial ? rank_fp(std::move(M), p) : rank_fp_parallel(std::move(M), p);
}

int max_threads();

}  // namespace chowcob
