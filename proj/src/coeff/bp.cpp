#include "chowcob/coeff/bp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace chowcob {

BPCoeff::BPCoeff(unsigned p, int N) : p_(p), N_(N) {
  require_prime(p);
  if (N < 1) throw MathError("truncation N must be positive");
}

BPCoeff BPCoeff::constant(const PLocal& c, unsigned p, int N) {
  BPCoeff b(p, N);
  if (!c.is_zero()) b.terms_[VExp(N, 0)] = c;
  return b;
}

BPCoeff BPCoeff::v(int i, unsigned p, int N) {
  if (i == 0) return constant(PLocal(static_cast<long>(p)), p, N);
  if (i < 0 || i > N) throw MathError("v_" + std::to_string(i) + " exceeds truncation N=" + std::to_string(N));
  VExp e(N, 0);
  e[i - 1] = 1;
  return monomial(e, PLocal(1), p, N);
}

BPCoeff BPCoeff::monomial(VExp e, const PLocal& c, unsigned p, int N) {
  BPCoeff b(p, N);
  if (static_cast<int>(e.size()) != N) throw MathError("exponent vector length differs from N");
  if (!c.is_zero()) b.terms_[std::move(e)] = c;
  return b;
}

long BPCoeff::monomial_degree(const VExp& e, unsigned p) {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d -= static_cast<long>(e[i]) * 2 * (ipow_ll(p, i + 1) - 1);
  return d;
}

bool BPCoeff::is_homogeneous() const {
  std::set<long> ds;
  for (auto& [e, c] : terms_) ds.insert(monomial_degree(e, p_));
  return ds.size() <= 1;
}

long BPCoeff::degree() const {
  if (is_zero()) throw MathError("zero has no degree");
  if (!is_homogeneous()) throw MathError("inhomogeneous BP coefficient " + str());
  return monomial_degree(terms_.begin()->first, p_);
}

void BPCoeff::check_compat(const BPCoeff& o) const {
  if (p_ != o.p_ || N_ != o.N_) throw MathError("BP coefficients over different (p, N)");
}

BPCoeff& BPCoeff::operator+=(const BPCoeff& o) {
  check_compat(o);
  for (auto& [e, c] : o.terms_) {
    auto& t = terms_[e];
    t += c;
    if (t.is_zero()) terms_.erase(e);
  }
  return *this;
}

BPCoeff& BPCoeff::operator-=(const BPCoeff& o) { return *this += o.scaled(PLocal(-1)); }

BPCoeff operator*(const BPCoeff& a, const BPCoeff& b) {
  a.check_compat(b);
  BPCoeff r(a.p_, a.N_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      VExp e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      auto& t = r.terms_[e];
      t += ca * cb;
      if (t.is_zero()) r.terms_.erase(e);
    }
  return r;
}

BPCoeff BPCoeff::scaled(const PLocal& c) const {
  BPCoeff r(p_, N_);
  if (c.is_zero()) return r;
  for (auto& [e, x] : terms_) r.terms_[e] = x * c;
  return r;
}

PLocal BPCoeff::specialize(int m) const {
  PLocal s(0);
  for (auto& [e, c] : terms_) {
    bool ok = true;
    for (int i = 0; i < N_; ++i)
      if (e[i] && i + 1 != m) ok = false;
    if (ok) s += c;
  }
  return s;
}

std::string BPCoeff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // higher-degree monomials (closer to 0) first, then by exponent vector
  std::vector<std::pair<VExp, PLocal>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [&](auto& a, auto& b) {
    return monomial_degree(a.first, p_) > monomial_degree(b.first, p_);
  });
  for (auto& [e, c] : ts) {
    PLocal cc = c;
    bool neg = sgn(cc.value()) < 0;
    if (neg) cc = -cc;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
    if (!cc.is_one() || !has_var) {
      os << cc.str();
      if (has_var) os << "*";
    }
    bool fv = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!fv) os << "*";
      fv = false;
      os << "v" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

InvariantIdeal invariant_ideal(int n, unsigned p, int N) {
  if (n < 0) throw MathError("n must be nonnegative");
  if (n > N + 1) throw MathError("I_" + std::to_string(n) + " needs v_" + std::to_string(n - 1) +
                                 " beyond truncation N=" + std::to_string(N));
  InvariantIdeal I{"I_" + std::to_string(n), p, N, {}};
  for (int j = 0; j < n; ++j) I.gens.push_back(BPCoeff::v(j, p, N));
  return I;
}

InvariantIdeal bp_negative(unsigned p, int N) {
  InvariantIdeal I{"BP<0", p, N, {}};
  for (int j = 1; j <= N; ++j) I.gens.push_back(BPCoeff::v(j, p, N));
  return I;
}

InvariantIdeal ideal_product(const InvariantIdeal& I, const InvariantIdeal& J) {
  if (I.p != J.p || I.N != J.N) throw MathError("ideal_product: mismatched p or N");
  InvariantIdeal K{I.label + "*" + J.label, I.p, I.N, {}};
  for (auto& a : I.gens)
    for (auto& b : J.gens) {
      BPCoeff c = a * b;
      if (c.is_zero()) continue;
      if (std::find(K.gens.begin(), K.gens.end(), c) == K.gens.end()) K.gens.push_back(c);
    }
  return K;
}

std::vector<VExp> v_monomials_of_degree(long deg, unsigned p, int N) {
  std::vector<VExp> out;
  if (deg > 0) return out;
  long target = -deg;
  VExp e(N, 0);
  std::function<void(int, long)> rec = [&](int i, long rest) {
    if (i < 0) {
      if (rest == 0) out.push_back(e);
      return;
    }
    long w = 2 * (ipow_ll(p, i + 1) - 1);
    for (long k = 0; k * w <= rest; ++k) {
      e[i] = static_cast<std::uint16_t>(k);
      rec(i - 1, rest - k * w);
    }
    e[i] = 0;
  };
  rec(N - 1, target);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// column vectors (as rows of a transposed list) spanning ideal in degree d
std::vector<std::vector<PLocal>> ideal_span(const InvariantIdeal& I, long d, const std::vector<VExp>& basis) {
  std::map<VExp, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  std::vector<std::vector<PLocal>> cols;
  for (auto& g : I.gens) {
    long dg = g.degree();
    for (auto& m : v_monomials_of_degree(d - dg, I.p, I.N)) {
      BPCoeff prod = BPCoeff::monomial(m, PLocal(1), I.p, I.N) * g;
      std::vector<PLocal> col(basis.size());
      for (auto& [e, c] : prod.terms()) col[idx.at(e)] = c;
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

Matrix as_matrix(const std::vector<std::vector<PLocal>>& cols, std::size_t rows) {
  Matrix A(rows, std::vector<PLocal>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) A[i][j] = cols[j][i];
  return A;
}

}  // namespace

GradedModule ideal_quotient_module(const InvariantIdeal& I, const InvariantIdeal& J, long lo, long hi) {
  if (I.p != J.p || I.N != J.N) throw MathError("ideal_quotient_module: mismatched p or N");
  const unsigned p = I.p;
  GradedModule out(p);
  for (long d = lo; d <= hi; ++d) {
    auto basis = v_monomials_of_degree(d, p, I.N);
    if (basis.empty()) continue;
    auto ci = ideal_span(I, d, basis);
    auto cj = ideal_span(J, d, basis);
    Matrix A = as_matrix(ci, basis.size());
    Matrix B = as_matrix(cj, basis.size());
    SmithResult s;
    if (!ci.empty()) s = smith_zp(A, p, &B);
    const std::size_t r = s.rank();
    for (std::size_t i = r; i < basis.size(); ++i)
      for (auto& x : B[i])
        if (!x.is_zero())
          throw MathError("containment error: " + J.label + " is not inside " + I.label + " in degree " +
                          std::to_string(d));
    Matrix C(r, std::vector<PLocal>(cj.size()));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < cj.size(); ++j) {
        if (B[k][j].is_zero()) continue;
        if (B[k][j].valuation(p) < s.pivots[k].valuation(p))
          throw MathError("containment error: " + J.label + " is not inside " + I.label + " in degree " +
                          std::to_string(d));
        C[k][j] = B[k][j].div_exact(s.pivots[k], p);
      }
    out.add(static_cast<int>(d), cokernel_zp(C, r, p));
  }
  return out;
}

}  // namespace chowcob
