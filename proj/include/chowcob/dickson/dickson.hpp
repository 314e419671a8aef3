#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowcob/gralg/algebra.hpp"

namespace chowcob {

struct DicksonData {
  int n = 0;
  unsigned p = 2;
  AlgebraPtr ring;            // F_p[y_1..y_n]
  std::vector<Polynomial> c;  // c[i] = c_{n,i}, c[n] = 1
};

// F_p[<prefix>1..<prefix>n], all of topological degree 2
AlgebraPtr dickson_ring(int n, unsigned p, const std::string& prefix = "y");

// Coefficients c_{n,i} of the additive polynomial prod_{v in F_p^n}(t + v.y),
// built one basis vector at a time:
// F_{V+<y>}(t) = F_V(t)^p - F_V(y)^{p-1} F_V(t).
DicksonData dickson_classes(int n, unsigned p, long max_terms = 250000);

// The literal orbit product over all p^n vectors, coefficient of t^k for every
// k.  Exponential; kept as the reference the recursion is tested against.
std::map<long, Polynomial> orbit_product_direct(int n, unsigned p, const std::string& prefix = "y");

struct EulerClass {
  Polynomial e;
  unsigned lambda;  // e^{p-1} = lambda * c_{n,0}, lambda in 1..p-1
};
EulerClass euler_class(int n, unsigned p);

// p = 2: d_{n,i} in F_2[x_1..x_n], checked against d_{n,i}^2 = c_{n,i}(y = x^2)
std::vector<Polynomial> d_classes(int n);

struct MKRow {
  int i;
  Polynomial composite;  // Q_0..^Q_i..Q_n(x_1...x_n)
  Polynomial product;    // e_n c_{n,i}
  std::optional<unsigned> scalar;  // composite = scalar * product
};
struct MKReport {
  int n;
  unsigned p;
  std::vector<MKRow> rows;
  bool ok() const;
};
MKReport verify_mimura_kameko(int n, unsigned p);

// Search for index sets S with Q_S(x_1..x_n) = d_{n,i} under two readings of
// x_j^2: "graded" (x_j^2 = y_j) and "mod_tau" (x_j^2 = 0).  Reported, not asserted.
struct ConventionMatch {
  int i;
  std::vector<int> S;
  std::string convention;
};
std::vector<ConventionMatch> d_convention_search(int n);

}  // namespace chowcob
