#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chowcob/coeff/plocal.hpp"

namespace chowcob {

using Matrix = std::vector<std::vector<PLocal>>;  // row major
using FpMatrix = std::vector<std::vector<std::uint32_t>>;

struct SmithResult {
  std::vector<int> diag;  // p-valuations of the invariant factors, in pivot order
  std::vector<PLocal> pivots;
  std::size_t rank() const { return diag.size(); }
};

// Smith normal form over Z_(p).  If companion is given it receives the same
// row operations (it must have as many rows as A).
SmithResult smith_zp(Matrix A, unsigned p, Matrix* companion = nullptr);

// Z_(p)^rows / column span of A
struct Cokernel {
  long free_rank = 0;
  std::map<int, long> torsion;  // k -> multiplicity of Z/p^k
  bool operator==(const Cokernel&) const = default;
};
Cokernel cokernel_zp(const Matrix& A, std::size_t rows, unsigned p);

std::size_t rank_fp(FpMatrix M, unsigned p);
unsigned inv_mod(unsigned a, unsigned p);

}  // namespace chowcob
