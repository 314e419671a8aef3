#include "chowcob/kernels/kernels.hpp"

#include <omp.h>

#include <utility>

namespace chowcob {

std::size_t rank_fp_parallel(FpMatrix M, unsigned p) {
  std::size_t rank = 0;
  const std::size_t r = M.size();
  const std::size_t c = r ? M[0].size() : 0;
  for (std::size_t j = 0; j < c && rank < r; ++j) {
    std::size_t piv = rank;
    while (piv < r && M[piv][j] == 0) ++piv;
    if (piv == r) continue;
    std::swap(M[piv], M[rank]);
    unsigned inv = inv_mod(M[rank][j], p);
    for (auto& x : M[rank]) x = static_cast<std::uint32_t>(1ull * x * inv % p);
    const auto& prow = M[rank];
    const long lo = static_cast<long>(rank + 1), hi = static_cast<long>(r);
#pragma omp parallel for schedule(static) if (hi - lo > 32)
    for (long i = lo; i < hi; ++i) {
      auto& row = M[i];
      std::uint32_t f = row[j];
      if (!f) continue;
      for (std::size_t k = j; k < c; ++k)
        row[k] = static_cast<std::uint32_t>((row[k] + 1ull * (p - f) * prow[k]) % p);
    }
    ++rank;
  }
  return rank;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace chowcob
