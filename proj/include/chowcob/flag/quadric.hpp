#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chowcob/gralg/presentation.hpp"
#include "chowcob/motive/degv.hpp"

namespace chowcob {

// anisotropic quadric of dimension 2l-1 with f_j (j >= 1) the least f such
// that v_j h^f y lies in the image of restriction
struct QuadricSpec {
  int l = 1;
  std::map<int, int> f;  // j -> f_j, j = 1..s
  bool anisotropic = true;

  // d_i = deg_v(h^i y) = 1 + #{j : f_j <= i}
  std::vector<int> d() const;
  static QuadricSpec from_d(int l, const std::vector<int>& d);
  static QuadricSpec pfister_max(int n);  // l = 2^n - 1, d_i = n
  static QuadricSpec pfister_min(int n);  // l = 2^{n-1}, d_{l-1} = n, else n-1
  static QuadricSpec split(int l);
};

struct QuadricResult {
  QuadricSpec spec;
  AlgebraPresentation presentation;
  GradedModule closed_form;   // Z[h]/(h^{2l}) + sum Z/2[h]/(h^{l-f_j}){u_j}
  GradedModule from_groups;   // graded_groups of the presentation
  GradedModule from_degv;     // sum of M_0(h^i) + M_{d_i}(h^i y)
  std::vector<int> J;         // J_i = deg(h^i y) - (2^{d_i} - 1)
  bool partition = false;     // {J_i} = {0..l-1}
  bool alt_form_agrees = false;  // J_i = i + 2^l - 2^{d_i}
  std::map<int, int> u_degree;     // j -> Chow degree of u_j
};

QuadricResult quadric_qx(const QuadricSpec& s);
// the deg_v facts of h^i y used by from_degv
DegvTable quadric_degv_table(const QuadricSpec& s);

struct EmbeddingReport {
  bool ok = true;
  std::vector<int> failing;  // j with f_j(X) outside [f_j(Y) - d, f_j(Y) + d]
};
EmbeddingReport quadric_embedding_bounds(const std::map<int, int>& fX, const std::map<int, int>& fY, int d);

// y in Lambda(x_{2i} : i in J)?  monomial given by its x-indices i (x_{2i})
bool vishik_membership(const std::set<int>& J, const std::set<int>& monomial, int l);

struct ZProduct {
  std::vector<std::set<int>> terms;     // F_2 sum after cancellation, sorted
  std::vector<std::string> dropped;     // terms removed by the convention
  static constexpr const char* convention =
      "repeated index or index > l annihilates a term; equal terms cancel in pairs over F_2";
  std::string str() const;
};
// zbar_I * zbar_j = zbar_{I u j} + sum_{i in I} zbar_{(I - i) u (i + j)}
ZProduct z_product(const std::set<int>& I, int j, int l);

}  // namespace chowcob
