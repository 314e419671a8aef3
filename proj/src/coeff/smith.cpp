#include "chowcob/coeff/smith.hpp"

#include <utility>

namespace chowcob {

SmithResult smith_zp(Matrix A, unsigned p, Matrix* companion) {
  SmithResult res;
  const std::size_t r = A.size();
  const std::size_t c = r ? A[0].size() : 0;
  if (companion && companion->size() != r) throw MathError("companion row count mismatch");
  for (std::size_t k = 0; k < r && k < c; ++k) {
    int best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < r && best != 0; ++i)
      for (std::size_t j = k; j < c; ++j) {
        if (A[i][j].is_zero()) continue;
        int v = A[i][j].valuation(p);
        if (best < 0 || v < best) {
          best = v, bi = i, bj = j;
          if (v == 0) break;
        }
      }
    if (best < 0) break;
    if (bi != k) {
      std::swap(A[bi], A[k]);
      if (companion) std::swap((*companion)[bi], (*companion)[k]);
    }
    if (bj != k)
      for (auto& row : A) std::swap(row[bj], row[k]);
    const PLocal piv = A[k][k];
    for (std::size_t i = k + 1; i < r; ++i) {
      if (A[i][k].is_zero()) continue;
      PLocal f = A[i][k].div_exact(piv, p);
      for (std::size_t j = k; j < c; ++j)
        if (!A[k][j].is_zero()) A[i][j] -= f * A[k][j];
      if (companion) {
        auto& cr = (*companion)[i];
        const auto& ck = (*companion)[k];
        for (std::size_t j = 0; j < cr.size(); ++j)
          if (!ck[j].is_zero()) cr[j] -= f * ck[j];
      }
    }
    // column clearing only touches row k
    for (std::size_t j = k + 1; j < c; ++j) A[k][j] = PLocal(0);
    res.diag.push_back(best);
    res.pivots.push_back(piv);
  }
  return res;
}

Cokernel cokernel_zp(const Matrix& A, std::size_t rows, unsigned p) {
  Cokernel out;
  if (rows == 0) return out;
  if (A.empty() || A[0].empty()) {
    out.free_rank = static_cast<long>(rows);
    return out;
  }
  auto s = smith_zp(A, p);
  out.free_rank = static_cast<long>(rows - s.rank());
  for (int v : s.diag)
    if (v > 0) ++out.torsion[v];
  return out;
}

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned long long r = 1, b = a % p;
  for (unsigned e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<unsigned>(r);
}

std::size_t rank_fp(FpMatrix M, unsigned p) {
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
    for (std::size_t i = rank + 1; i < r; ++i) {
      std::uint32_t f = M[i][j];
      if (!f) continue;
      for (std::size_t k = j; k < c; ++k)
        M[i][k] = static_cast<std::uint32_t>((M[i][k] + 1ull * (p - f) * M[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace chowcob
