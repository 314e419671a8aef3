#include "chowcob/dickson/dickson.hpp"

#include <gmpxx.h>

#include "chowcob/coeff/smith.hpp"
#include "chowcob/steenrod/bundled.hpp"

namespace chowcob {

AlgebraPtr dickson_ring(int n, unsigned p, const std::string& prefix) {
  std::vector<GeneratorSpec> gens;
  for (int j = 1; j <= n; ++j) gens.push_back({prefix + std::to_string(j), 2, Parity::even, 0});
  return make_algebra(p, CoeffMode::fp, gens);
}

namespace {

void check_size(int n, unsigned p, long max_terms) {
  if (n < 1) throw MathError("Dickson classes need n >= 1");
  require_prime(p);
  // monomials of degree p^n - 1 in n variables bounds every c_{n,i}
  mpz_class deg = ipow(mpz_class(p), static_cast<unsigned>(n)) - 1;
  mpz_class count;
  mpz_bin_ui(count.get_mpz_t(), mpz_class(deg + n - 1).get_mpz_t(), static_cast<unsigned long>(n - 1));
  if (count > max_terms)
    throw MathError("size limit exceeded: c_{" + std::to_string(n) + ",0} at p=" + std::to_string(p) + " may have " +
                    count.get_str() + " terms (limit " + std::to_string(max_terms) + ")");
}

}  // namespace

DicksonData dickson_classes(int n, unsigned p, long max_terms) {
  check_size(n, p, max_terms);
  DicksonData D{n, p, dickson_ring(n, p), {}};
  auto A = D.ring;
  // coefficients of t^{p^i} for the space spanned by y_1..y_k
  std::vector<Polynomial> F{Polynomial::constant(A, PLocal(1))};  // F(t) = t
  for (int k = 1; k <= n; ++k) {
    Polynomial yk = Polynomial::generator(A, static_cast<std::size_t>(k - 1));
    Polynomial w(A);  // F(y_k)
    for (std::size_t i = 0; i < F.size(); ++i) w += F[i] * yk.pow(static_cast<unsigned>(ipow_ll(p, i)));
    Polynomial wp = w.pow(p - 1);
    std::vector<Polynomial> G(F.size() + 1, Polynomial(A));
    for (std::size_t i = 0; i < F.size(); ++i) {
      G[i + 1] += F[i].frobenius();
      G[i] -= wp * F[i];
    }
    F = std::move(G);
  }
  D.c = std::move(F);
  return D;
}

std::map<long, Polynomial> orbit_product_direct(int n, unsigned p, const std::string& prefix) {
  std::vector<GeneratorSpec> gens{{"t", 2, Parity::even, 0}};
  for (int j = 1; j <= n; ++j) gens.push_back({prefix + std::to_string(j), 2, Parity::even, 0});
  auto B = make_algebra(p, CoeffMode::fp, gens);
  auto A = dickson_ring(n, p, prefix);
  Polynomial prod = Polynomial::constant(B, PLocal(1));
  std::vector<unsigned> v(static_cast<std::size_t>(n), 0);
  long total = ipow_ll(p, static_cast<unsigned>(n));
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    Polynomial lin = Polynomial::generator(B, 0);
    for (int j = 0; j < n; ++j) {
      long a = r % p;
      r /= p;
      if (a) lin += Polynomial::generator(B, static_cast<std::size_t>(j + 1)).scaled(PLocal(a));
    }
    prod *= lin;
  }
  std::map<long, Polynomial> out;
  for (auto& [e, c] : prod.terms()) {
    Exps rest(e.begin() + 1, e.end());
    auto it = out.try_emplace(e[0], Polynomial(A)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

EulerClass euler_class(int n, unsigned p) {
  auto D = dickson_classes(n, p);
  auto A = D.ring;
  Polynomial e = Polynomial::constant(A, PLocal(1));
  long total = ipow_ll(p, static_cast<unsigned>(n));
  for (long idx = 1; idx < total; ++idx) {
    std::vector<long> a(static_cast<std::size_t>(n));
    long r = idx;
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = r % p, r /= p;
    int first = 0;
    while (a[static_cast<std::size_t>(first)] == 0) ++first;
    if (a[static_cast<std::size_t>(first)] != 1) continue;  // one representative per line
    Polynomial lin(A);
    for (int j = 0; j < n; ++j)
      if (a[static_cast<std::size_t>(j)])
        lin += Polynomial::generator(A, static_cast<std::size_t>(j)).scaled(PLocal(a[static_cast<std::size_t>(j)]));
    e *= lin;
  }
  Polynomial ep = e.pow(p - 1);
  const Polynomial& c0 = D.c[0];
  if (c0.is_zero() || ep.is_zero()) throw MathError("euler_class: degenerate classes");
  auto& [m, x] = *c0.terms().begin();
  unsigned lam = ep.coeff(m).mod_p(p) * inv_mod(x.mod_p(p), p) % p;
  if (lam == 0 || ep != c0.scaled(PLocal(static_cast<long>(lam))))
    throw MathError("euler_class: e^{p-1} is not a unit multiple of c_{n,0}");
  return {e, lam};
}

std::vector<Polynomial> d_classes(int n) {
  auto D = dickson_classes(n, 2);
  auto X = dickson_ring(n, 2, "x");
  // same recursion in the x variables
  std::vector<Polynomial> F{Polynomial::constant(X, PLocal(1))};
  for (int k = 1; k <= n; ++k) {
    Polynomial xk = Polynomial::generator(X, static_cast<std::size_t>(k - 1));
    Polynomial w(X);
    for (std::size_t i = 0; i < F.size(); ++i) w += F[i] * xk.pow(1u << i);
    std::vector<Polynomial> G(F.size() + 1, Polynomial(X));
    for (std::size_t i = 0; i < F.size(); ++i) {
      G[i + 1] += F[i].frobenius();
      G[i] -= w * F[i];
    }
    F = std::move(G);
  }
  std::vector<Polynomial> sq;
  for (int j = 0; j < n; ++j) sq.push_back(Polynomial::generator(X, static_cast<std::size_t>(j)).pow(2));
  for (int i = 0; i <= n; ++i)
    if (F[static_cast<std::size_t>(i)].frobenius() != D.c[static_cast<std::size_t>(i)].evaluate(sq, X))
      throw MathError("d_classes: d_{n,i}^2 != c_{n,i} for i=" + std::to_string(i));
  return F;
}

bool MKReport::ok() const {
  for (auto& r : rows)
    if (!r.scalar) return false;
  return true;
}

namespace {

std::optional<unsigned> unit_ratio(const Polynomial& a, const Polynomial& b, unsigned p) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  auto& [m, x] = *b.terms().begin();
  unsigned lam = a.coeff(m).mod_p(p) * inv_mod(x.mod_p(p), p) % p;
  if (lam == 0 || a != b.scaled(PLocal(static_cast<long>(lam)))) return std::nullopt;
  return lam;
}

Polynomial x_product(const OperationTable& T, int n) {
  Polynomial x = Polynomial::constant(T.algebra(), PLocal(1));
  for (int j = 1; j <= n; ++j) x *= Polynomial::generator(T.algebra(), "x" + std::to_string(j));
  return x;
}

}  // namespace

MKReport verify_mimura_kameko(int n, unsigned p) {
  auto D = dickson_classes(n, p);
  auto E = euler_class(n, p);
  OperationTable T = bzp_table(n, p, n);
  std::vector<Polynomial> ys;
  for (int j = 1; j <= n; ++j) ys.push_back(Polynomial::generator(T.algebra(), "y" + std::to_string(j)));
  Polynomial x = x_product(T, n);
  MKReport rep{n, p, {}};
  for (int i = 0; i <= n; ++i) {
    Polynomial lhs = milnor_composite(i, n, x, T);
    Polynomial rhs = (E.e * D.c[static_cast<std::size_t>(i)]).evaluate(ys, T.algebra());
    rep.rows.push_back({i, lhs, rhs, unit_ratio(lhs, rhs, p)});
  }
  return rep;
}

std::vector<ConventionMatch> d_convention_search(int n) {
  auto d = d_classes(n);
  OperationTable T = bzp_table(n, 2, n + 1);
  const auto& A = T.algebra();
  Polynomial x = x_product(T, n);
  // d_{n,i} read in the table algebra under each convention
  auto translate = [&](const Polynomial& f, bool graded) {
    Polynomial r(A);
    for (auto& [e, c] : f.terms()) {
      Exps t(A->size(), 0);
      bool zero = false;
      for (int j = 0; j < n; ++j) {
        auto k = e[static_cast<std::size_t>(j)];
        if (!graded && k >= 2) zero = true;
        t[static_cast<std::size_t>(j)] = k % 2;
        t[static_cast<std::size_t>(n + j)] = static_cast<std::uint16_t>(k / 2);
      }
      if (!zero) r.add_term(t, c);
    }
    return r;
  };
  std::vector<ConventionMatch> out;
  const int top = n + 1;
  for (int i = 0; i < n; ++i) {
    Polynomial g = translate(d[static_cast<std::size_t>(i)], true);
    Polynomial z = translate(d[static_cast<std::size_t>(i)], false);
    for (unsigned mask = 0; mask < (1u << (top + 1)); ++mask) {
      Polynomial f = x;
      std::vector<int> S;
      for (int j = top; j >= 0; --j)
        if (mask >> j & 1u) f = apply_Q(j, f, T);
      for (int j = 0; j <= top; ++j)
        if (mask >> j & 1u) S.push_back(j);
      if (f.is_zero()) continue;
      if (f == g) out.push_back({i, S, "graded"});
      if (!z.is_zero() && f == z) out.push_back({i, S, "mod_tau"});
    }
  }
  return out;
}

}  // namespace chowcob
