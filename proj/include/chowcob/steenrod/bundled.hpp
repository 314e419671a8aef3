#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowcob/steenrod/table.hpp"

namespace chowcob {

// H*(B(Z/p)^n) in the associated-graded form: exterior x_j (deg 1), polynomial
// y_j (deg 2), Q_i(x_j) = (-1)^i y_j^{p^i}, P_t(y_j) = y_j + y_j^p t.
OperationTable bzp_table(int n, unsigned p, int i_max = -1);

struct SOMSpec {
  int m;
  std::vector<int> odd;                 // odd indices 1..m-1
  std::map<int, int> y_height;          // 4i+2 -> 2^{s(i)}
  explicit SOMSpec(int m);
};

// gr H*(SO(m); Z/2) = Lambda(x_odd) (x) Z/2[y_{4i+2}]/(y^{2^{s(i)}})
OperationTable so_table(int m);
// the class x_index of SO(m), even indices rewritten as powers of y_{2b}
Polynomial so_x(const OperationTable& T, int m, int index);

// type (I) generator data: G2 at p=2, F4 at p=3
OperationTable g2_table();
OperationTable f4_table();

// "bzp_<n>" (p via argument), "so_<m>", "g2", "f4"
OperationTable bundled_table(const std::string& key, unsigned p = 2);

}  // namespace chowcob
