#pragma once

#include <string>
#include <vector>

#include "chowcob/coeff/bp.hpp"
#include "chowcob/gralg/graded_module.hpp"

namespace chowcob {

struct MnModule {
  int n;
  unsigned p;
  int deg_y;  // Chow degree
  GradedModule module;
};

// Z_(p){c_0} + Z/p{c_1..c_{n-1}}, |c_i| = deg_y - (p^i - 1) in Chow degrees
MnModule mn_module(int n, unsigned p, int deg_y);
// the same module read off J/(BP^{<0} J) for J = I_n, placed at deg_y
GradedModule ideal_pattern_module(const InvariantIdeal& J, int deg_y);
// J = (p, v1^2) and J = (p^2, p v1, v1^2)
InvariantIdeal ideal_p_v1sq(unsigned p, int N = 2);
InvariantIdeal ideal_p2_pv1_v1sq(unsigned p, int N = 2);

// CH*(R_n) = Z_(p) + sum_{i=1}^{p-1} M_n(y^i), |y| = (p^n - 1)/(p - 1)
GradedModule rost_chow(int n, unsigned p);
long rost_b(int n, unsigned p);

struct BPGenerator {
  std::string name;
  int chow_deg;
};
struct BPRelation {
  std::vector<std::pair<std::size_t, BPCoeff>> terms;  // sum coeff * generator
};
struct BPModulePresentation {
  unsigned p = 2;
  int N = 1;
  std::vector<BPGenerator> gens;
  std::vector<BPRelation> rels;
  // Chow degree of a relation; throws if it is not homogeneous
  long relation_degree(const BPRelation& r) const;
};

// Res_Omega of the Rost motive: Omega{1} + I_n[y]^+/(y^p)
BPModulePresentation rost_res_omega(int n, unsigned p, int N = 0);
// v_m -> 1, v_j -> 0 (j != m); Z_(p)-module per Chow degree residue mod p^m - 1
GradedModule morava_localize(const BPModulePresentation& M, int m);

// Tensor product with c_0 (x) c_1 = c_1 (x) c_0 imposed between blocks
struct MarkedClass {
  std::string block;
  std::string marker;  // "c0", "c1", or empty
  int chow_deg;
  int k;  // 0 for a free class, else order p^k
};
using MarkedModule = std::vector<MarkedClass>;
MarkedModule marked_mn(int n, unsigned p, int deg_y, const std::string& block);
GradedModule product_type_I(const MarkedModule& A, const MarkedModule& B, unsigned p);
GradedModule marked_to_graded(const MarkedModule& A, unsigned p);

}  // namespace chowcob
