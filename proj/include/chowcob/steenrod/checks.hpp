#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "chowcob/kernels/kernels.hpp"
#include "chowcob/steenrod/table.hpp"

namespace chowcob {

struct RecursionReport {
  bool ok = true;
  long checked = 0;  // (i, monomial) pairs
  int failing_i = -1;
  std::optional<Polynomial> counterexample;
  std::string detail;
};

// Q_{i+1} = Q_i P^{p^i} - P^{p^i} Q_i for 0 <= i <= i_max, on every generator and
// every monomial of Chow degree <= chow_bound (topological degree <= 2 chow_bound)
RecursionReport verify_Q_recursion(const OperationTable& T, int i_max, int chow_bound, Exec ex = Exec::parallel);

struct IdentityReport {
  bool ok = true;
  long checked = 0;
  std::string failure;
};

// Q_i Q_i = 0 on all monomials up to the bound
IdentityReport check_Q_squared(const OperationTable& T, int chow_bound, Exec ex = Exec::parallel);
// Leibniz rule on random pairs of polynomials
IdentityReport check_derivation(const OperationTable& T, int samples, int chow_bound, std::uint32_t seed = 1);
// P_t(fg) = P_t(f) P_t(g) on random pairs
IdentityReport check_cartan(const OperationTable& T, int samples, int chow_bound, std::uint32_t seed = 1);

// all monomials of topological degree 1..top_bound, generators first
std::vector<Polynomial> monomial_sample(const OperationTable& T, int top_bound);

// i -> whether y_{2i} is hit by some Sq^{2k}, k >= 1, from a generator y_{2i'}
std::map<int, bool> so_steenrod_image(int m);

}  // namespace chowcob
