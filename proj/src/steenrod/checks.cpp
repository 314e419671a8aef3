#include "chowcob/steenrod/checks.hpp"

#include <random>

#include "chowcob/steenrod/bundled.hpp"

namespace chowcob {

std::vector<Polynomial> monomial_sample(const OperationTable& T, int top_bound) {
  const AlgebraPtr& A = T.algebra();
  std::vector<Polynomial> out;
  for (std::size_t g = 0; g < A->size(); ++g)
    if (A->gens()[g].top_degree <= top_bound) out.push_back(Polynomial::generator(A, g));
  for (long d = 1; d <= top_bound; ++d)
    for (auto& e : A->monomials_of_top_degree(d)) {
      long s = 0;
      for (auto x : e) s += x;
      if (s > 1) out.push_back(Polynomial::monomial(A, e));
    }
  return out;
}

RecursionReport verify_Q_recursion(const OperationTable& T, int i_max, int chow_bound, Exec ex) {
  RecursionReport rep;
  if (i_max + 1 > T.i_max()) throw MathError("table " + T.name() + " has no Q_" + std::to_string(i_max + 1));
  auto mons = monomial_sample(T, 2 * chow_bound);
  const unsigned p = T.p();
  for (int i = 0; i <= i_max; ++i) {
    const int k = static_cast<int>(ipow_ll(p, static_cast<unsigned>(i)));
    auto bad = find_first(mons.size(), ex, [&](std::size_t j) {
      const Polynomial& f = mons[j];
      Polynomial lhs = apply_Q(i + 1, f, T);
      Polynomial rhs = apply_Q(i, apply_power(k, f, T), T) - apply_power(k, apply_Q(i, f, T), T);
      return lhs != rhs;
    });
    rep.checked += static_cast<long>(bad == mons.size() ? mons.size() : bad + 1);
    if (bad < mons.size()) {
      const Polynomial& f = mons[bad];
      rep.ok = false;
      rep.failing_i = i;
      rep.counterexample = f;
      Polynomial lhs = apply_Q(i + 1, f, T);
      Polynomial rhs = apply_Q(i, apply_power(k, f, T), T) - apply_power(k, apply_Q(i, f, T), T);
      rep.detail = "Q_" + std::to_string(i + 1) + "(" + f.str() + ") = " + lhs.str() + " but the commutator gives " +
                   rhs.str();
      return rep;
    }
  }
  return rep;
}

IdentityReport check_Q_squared(const OperationTable& T, int chow_bound, Exec ex) {
  IdentityReport rep;
  auto mons = monomial_sample(T, 2 * chow_bound);
  for (int i = 0; i <= T.i_max(); ++i) {
    auto bad = find_first(mons.size(), ex, [&](std::size_t j) { return !apply_Q(i, apply_Q(i, mons[j], T), T).is_zero(); });
    rep.checked += static_cast<long>(mons.size());
    if (bad < mons.size()) {
      rep.ok = false;
      rep.failure = "Q_" + std::to_string(i) + "^2(" + mons[bad].str() + ") != 0";
      return rep;
    }
  }
  return rep;
}

namespace {

Polynomial random_poly(const std::vector<Polynomial>& mons, std::mt19937& rng, unsigned p) {
  Polynomial f(mons.front().algebra());
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<unsigned> coef(1, p - 1);
  // a homogeneous sum of up to three monomials
  const Polynomial& m0 = mons[pick(rng)];
  f += m0.scaled(PLocal(coef(rng)));
  for (int t = 0; t < 8; ++t) {
    const Polynomial& m = mons[pick(rng)];
    if (m.top_degree() == m0.top_degree() && m != m0) {
      f += m.scaled(PLocal(coef(rng)));
      if (f.size() >= 3) break;
    }
  }
  return f;
}

}  // namespace

IdentityReport check_derivation(const OperationTable& T, int samples, int chow_bound, std::uint32_t seed) {
  IdentityReport rep;
  auto mons = monomial_sample(T, chow_bound);
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Polynomial f = random_poly(mons, rng, T.p()), g = random_poly(mons, rng, T.p());
    const PLocal sign(f.top_degree() % 2 ? -1 : 1);
    for (int i = 0; i <= T.i_max(); ++i) {
      Polynomial lhs = apply_Q(i, f * g, T);
      Polynomial rhs = apply_Q(i, f, T) * g + (f * apply_Q(i, g, T)).scaled(sign);
      ++rep.checked;
      if (lhs != rhs) {
        rep.ok = false;
        rep.failure = "Leibniz fails for Q_" + std::to_string(i) + " on (" + f.str() + ")*(" + g.str() + ")";
        return rep;
      }
    }
  }
  return rep;
}

IdentityReport check_cartan(const OperationTable& T, int samples, int chow_bound, std::uint32_t seed) {
  IdentityReport rep;
  auto mons = monomial_sample(T, chow_bound);
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Polynomial f = random_poly(mons, rng, T.p()), g = random_poly(mons, rng, T.p());
    long top = (f * g).is_zero() ? 0 : (f * g).top_degree();
    for (int k = 0; 2 * k * static_cast<long>(T.p() - 1) <= top; ++k) {
      Polynomial rhs(T.algebra());
      for (int a = 0; a <= k; ++a) rhs += apply_power(a, f, T) * apply_power(k - a, g, T);
      ++rep.checked;
      if (apply_power(k, f * g, T) != rhs) {
        rep.ok = false;
        rep.failure = "Cartan fails for P^" + std::to_string(k) + " on (" + f.str() + ")*(" + g.str() + ")";
        return rep;
      }
    }
  }
  return rep;
}

std::map<int, bool> so_steenrod_image(int m) {
  if (m < 3 || m % 2 == 0) throw MathError("so_steenrod_image needs odd m >= 3");
  OperationTable T = so_table(m);
  const AlgebraPtr& A = T.algebra();
  std::map<int, bool> hit;
  std::vector<std::size_t> ys;
  for (std::size_t g = 0; g < A->size(); ++g)
    if (!A->odd(g)) {
      ys.push_back(g);
      hit[A->gens()[g].top_degree / 2] = false;
    }
  for (auto g : ys) {
    Polynomial y = Polynomial::generator(A, g);
    for (int k = 1; 2 * k + A->gens()[g].top_degree <= m - 1; ++k) {
      Polynomial img = apply_power(k, y, T);
      for (auto& [e, c] : img.terms()) {
        long s = 0;
        std::size_t at = 0;
        for (std::size_t j = 0; j < e.size(); ++j)
          if (e[j]) s += e[j], at = j;
        if (s == 1 && !A->odd(at) && !c.is_zero()) hit[A->gens()[at].top_degree / 2] = true;
      }
    }
  }
  return hit;
}

}  // namespace chowcob
