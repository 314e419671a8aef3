#include "chowcob/steenrod/bundled.hpp"

#include <gmpxx.h>

namespace chowcob {

OperationTable bzp_table(int n, unsigned p, int i_max) {
  if (n < 1) throw MathError("bzp table needs n >= 1");
  if (i_max < 0) i_max = n + 1;
  std::vector<GeneratorSpec> gens;
  for (int j = 1; j <= n; ++j) gens.push_back({"x" + std::to_string(j), 1, Parity::odd, 0});
  for (int j = 1; j <= n; ++j) gens.push_back({"y" + std::to_string(j), 2, Parity::even, 0});
  auto A = make_algebra(p, CoeffMode::fp, gens);
  OperationTable T("bzp_" + std::to_string(n), A, i_max);
  for (int j = 1; j <= n; ++j) {
    std::string x = "x" + std::to_string(j), y = "y" + std::to_string(j);
    Polynomial Y = Polynomial::generator(A, y);
    for (int i = 0; i <= i_max; ++i) {
      Polynomial img = Y.pow(static_cast<unsigned>(ipow_ll(p, static_cast<unsigned>(i))));
      T.set_Q(i, x, i % 2 ? -img : img);
      T.set_Q(i, y, Polynomial(A));
    }
    T.set_power(x, {Polynomial::generator(A, x)});
    T.set_power(y, {Y, Y.pow(p)});
  }
  T.validate();
  return T;
}

SOMSpec::SOMSpec(int m_) : m(m_) {
  if (m < 3) throw MathError("SO(m) table needs m >= 3");
  for (int o = 1; o <= m - 1; o += 2) odd.push_back(o);
  for (int d = 2; d <= m - 1; d += 4) {
    int s = 0;
    while ((1L << s) * d < m) ++s;
    y_height[d] = 1 << s;
  }
}

namespace {

std::string xname(int i) { return "x" + std::to_string(i); }
std::string yname(int i) { return "y" + std::to_string(i); }

bool binom_odd(long n, long k) { return k >= 0 && k <= n && (n & k) == k; }

}  // namespace

Polynomial so_x(const OperationTable& T, int m, int index) {
  const AlgebraPtr& A = T.algebra();
  if (index <= 0 || index > m - 1) return Polynomial(A);
  if (index % 2) return Polynomial::generator(A, xname(index));
  int a = 0, b = index;
  while (b % 2 == 0) b /= 2, ++a;
  // x_{2^a b} = y_{2b}^{2^{a-1}}
  return Polynomial::generator(A, yname(2 * b)).pow(1u << (a - 1));
}

OperationTable so_table(int m) {
  SOMSpec spec(m);
  std::vector<GeneratorSpec> gens;
  for (int o : spec.odd) gens.push_back({xname(o), o, Parity::odd, 0});
  for (auto& [d, h] : spec.y_height) gens.push_back({yname(d), d, Parity::even, h});
  auto A = make_algebra(2, CoeffMode::fp, gens);
  int i_max = 0;
  while ((1 << (i_max + 1)) <= m) ++i_max;
  OperationTable T("so_" + std::to_string(m), A, i_max + 1);
  for (int i = 0; i <= T.i_max(); ++i) {
    int shift = (1 << (i + 1)) - 1;
    for (int o : spec.odd) T.set_Q(i, xname(o), so_x(T, m, o + shift));
    for (auto& [d, h] : spec.y_height) T.set_Q(i, yname(d), Polynomial(A));
  }
  for (int o : spec.odd) {
    // Sq^{2k} x_o = C(o, 2k) x_{o+2k}
    std::vector<Polynomial> pt;
    for (int k = 0; o + 2 * k <= m - 1; ++k)
      pt.push_back(binom_odd(o, 2 * k) ? so_x(T, m, o + 2 * k) : Polynomial(A));
    T.set_power(xname(o), pt);
  }
  for (auto& [d, h] : spec.y_height) {
    // y_d is x_d; Sq^{2k} x_d = C(d, 2k) x_{d+2k}
    std::vector<Polynomial> pt;
    for (int k = 0; d + 2 * k <= m - 1; ++k)
      pt.push_back(binom_odd(d, 2 * k) ? so_x(T, m, d + 2 * k) : Polynomial(A));
    T.set_power(yname(d), pt);
  }
  T.validate();
  return T;
}

OperationTable g2_table() {
  auto A = make_algebra(2, CoeffMode::fp,
                        {{"x3", 3, Parity::odd, 0}, {"x5", 5, Parity::odd, 0}, {"y", 6, Parity::even, 2}});
  OperationTable T("g2", A, 3);
  Polynomial y = Polynomial::generator(A, "y"), z(A);
  for (int i = 0; i <= 3; ++i)
    for (auto g : {"x3", "x5", "y"}) T.set_Q(i, g, z);
  T.set_Q(0, "x5", y);
  T.set_Q(1, "x3", y);
  T.set_power("x3", {Polynomial::generator(A, "x3"), Polynomial::generator(A, "x5")});
  T.set_power("x5", {Polynomial::generator(A, "x5")});
  T.set_power("y", {y});
  T.validate();
  return T;
}

OperationTable f4_table() {
  auto A = make_algebra(3, CoeffMode::fp,
                        {{"x3", 3, Parity::odd, 0},
                         {"x7", 7, Parity::odd, 0},
                         {"x11", 11, Parity::odd, 0},
                         {"x15", 15, Parity::odd, 0},
                         {"y", 8, Parity::even, 3}});
  OperationTable T("f4", A, 3);
  Polynomial y = Polynomial::generator(A, "y"), z(A);
  for (int i = 0; i <= 3; ++i)
    for (auto g : {"x3", "x7", "x11", "x15", "y"}) T.set_Q(i, g, z);
  T.set_Q(0, "x7", y);
  T.set_Q(0, "x15", y * y);
  T.set_Q(1, "x3", y);
  T.set_Q(1, "x11", y * y);
  auto g = [&](const char* n) { return Polynomial::generator(A, n); };
  T.set_power("x3", {g("x3"), g("x7")});
  T.set_power("x7", {g("x7")});
  T.set_power("x11", {g("x11"), g("x15")});
  T.set_power("x15", {g("x15")});
  T.set_power("y", {y});
  T.validate();
  return T;
}

OperationTable bundled_table(const std::string& key, unsigned p) {
  if (key == "g2") return g2_table();
  if (key == "f4") return f4_table();
  auto num = [&](const std::string& prefix) -> int {
    try {
      return std::stoi(key.substr(prefix.size()));
    } catch (...) {
      throw MathError("bad table key " + key);
    }
  };
  if (key.rfind("bzp_", 0) == 0) return bzp_table(num("bzp_"), p);
  if (key.rfind("so_", 0) == 0) return so_table(num("so_"));
  throw MathError("unknown table " + key);
}

}  // namespace chowcob
