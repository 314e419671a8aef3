#include "chowcob/gralg/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chowcob {

Algebra::Algebra(unsigned p, CoeffMode mode, std::vector<GeneratorSpec> gens)
    : p_(p), mode_(mode), gens_(std::move(gens)) {
  require_prime(p);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    auto& g = gens_[i];
    if (g.name.empty()) throw MathError("empty generator name");
    bool odd_deg = (g.top_degree % 2) != 0;
    if (odd_deg != (g.parity == Parity::odd))
      throw MathError("generator " + g.name + ": parity does not match degree " + std::to_string(g.top_degree));
    if (!idx_.emplace(g.name, i).second) throw MathError("duplicate generator " + g.name);
    if (g.parity == Parity::odd) has_odd_ = true;
    if (g.height < 0) throw MathError("negative height for " + g.name);
  }
}

AlgebraPtr make_algebra(unsigned p, CoeffMode mode, std::vector<GeneratorSpec> gens) {
  return std::make_shared<const Algebra>(p, mode, std::move(gens));
}

std::optional<std::size_t> Algebra::index(const std::string& name) const {
  auto it = idx_.find(name);
  if (it == idx_.end()) return std::nullopt;
  return it->second;
}

std::size_t Algebra::require_index(const std::string& name) const {
  auto i = index(name);
  if (!i) throw MathError("unknown generator " + name);
  return *i;
}

bool Algebra::all_positive() const {
  return std::all_of(gens_.begin(), gens_.end(), [](auto& g) { return g.top_degree > 0; });
}

long Algebra::top_degree(const Exps& e) const {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * gens_[i].top_degree;
  return d;
}

long Algebra::weighted_degree(const Exps& e) const {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * weight(i);
  return d;
}

int Algebra::mono_mul(const Exps& a, const Exps& b, Exps& out) const {
  out.resize(a.size());
  int swaps = 0;
  int odd_in_a_after = 0;  // odd generators of a with index > current
  if (has_odd_)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (odd(j) && a[j]) ++odd_in_a_after;
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned e = a[i] + b[i];
    int h = height(i);
    if (h && static_cast<int>(e) >= h) return 0;
    out[i] = static_cast<std::uint16_t>(e);
    if (has_odd_ && odd(i)) {
      if (a[i]) --odd_in_a_after;
      if (b[i]) swaps += odd_in_a_after;
    }
  }
  return (swaps & 1) ? -1 : 1;
}

PLocal Algebra::normalize(const PLocal& c) const {
  if (mode_ == CoeffMode::fp) return PLocal(static_cast<long>(c.mod_p(p_)));
  return c;
}

namespace {

std::vector<Exps> enumerate(const Algebra& A, long deg, const std::function<long(std::size_t)>& w) {
  std::vector<Exps> out;
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i)
    if (w(i) <= 0) throw MathError("monomial enumeration needs positive generator degrees");
  if (deg < 0) return out;
  Exps e(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
    if (i == n) {
      if (rest == 0) out.push_back(e);
      return;
    }
    long wi = w(i);
    int h = A.height(i);
    for (long k = 0; k * wi <= rest && (!h || k < h); ++k) {
      e[i] = static_cast<std::uint16_t>(k);
      rec(i + 1, rest - k * wi);
    }
    e[i] = 0;
  };
  rec(0, deg);
  std::sort(out.begin(), out.end(), [&](const Exps& a, const Exps& b) { return mono_greater(A, a, b); });
  return out;
}

}  // namespace

std::vector<Exps> Algebra::monomials_of_top_degree(long deg) const {
  return enumerate(*this, deg, [&](std::size_t i) { return static_cast<long>(gens_[i].top_degree); });
}

std::vector<Exps> Algebra::monomials_of_weighted_degree(long deg) const {
  return enumerate(*this, deg, [&](std::size_t i) { return static_cast<long>(weight(i)); });
}

std::shared_ptr<const Algebra> Algebra::with_mode(CoeffMode m) const {
  return make_algebra(p_, m, gens_);
}

bool mono_greater(const Algebra& A, const Exps& a, const Exps& b) {
  long da = A.weighted_degree(a), db = A.weighted_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Polynomial::Polynomial(AlgebraPtr A) : A_(std::move(A)) {
  if (!A_) throw MathError("polynomial without algebra");
}

Polynomial Polynomial::constant(AlgebraPtr A, const PLocal& c) {
  Polynomial f(A);
  f.add_term(Exps(A->size(), 0), c);
  return f;
}

Polynomial Polynomial::generator(AlgebraPtr A, const std::string& name) {
  return generator(A, A->require_index(name));
}

Polynomial Polynomial::generator(AlgebraPtr A, std::size_t i) {
  Exps e(A->size(), 0);
  e.at(i) = 1;
  return monomial(A, e);
}

Polynomial Polynomial::monomial(AlgebraPtr A, Exps e, const PLocal& c) {
  Polynomial f(A);
  if (e.size() != A->size()) throw MathError("exponent vector length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    int h = A->height(i);
    if (h && e[i] >= h) return f;
  }
  f.add_term(e, c);
  return f;
}

void Polynomial::add_term(const Exps& e, const PLocal& c) {
  PLocal x = A_->normalize(c);
  if (x.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, x);
  if (!fresh) {
    it->second = A_->normalize(it->second + x);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same(const Polynomial& o) const {
  if (A_ != o.A_ && (A_->gens().size() != o.A_->gens().size() || A_->p() != o.A_->p() ||
                     A_->mode() != o.A_->mode()))
    throw MathError("polynomials over different algebras");
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = A_->top_degree(terms_.begin()->first);
  for (auto& [e, c] : terms_)
    if (A_->top_degree(e) != d) return false;
  return true;
}

long Polynomial::top_degree() const {
  if (terms_.empty()) throw MathError("zero polynomial has no degree");
  if (!is_homogeneous()) throw MathError("inhomogeneous polynomial " + str());
  return A_->top_degree(terms_.begin()->first);
}

long Polynomial::chow_degree() const {
  long d = top_degree();
  if (d % 2) throw MathError("odd class has no Chow degree");
  return d / 2;
}

PLocal Polynomial::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? PLocal(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.A_);
  Exps e;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      int s = a.A_->mono_mul(ea, eb, e);
      if (!s) continue;
      PLocal c = ca * cb;
      r.add_term(e, s > 0 ? c : -c);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const PLocal& c) const {
  Polynomial r(A_);
  for (auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(A_, PLocal(1));
  Polynomial b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Polynomial Polynomial::frobenius() const {
  if (A_->mode() != CoeffMode::fp) throw MathError("frobenius needs F_p coefficients");
  const unsigned p = A_->p();
  Polynomial r(A_);
  for (auto& [e, c] : terms_) {
    Exps f(e.size());
    bool zero = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      unsigned x = e[i] * p;
      int h = A_->height(i);
      if (h && e[i] && static_cast<int>(x) >= h) zero = true;
      f[i] = static_cast<std::uint16_t>(x);
    }
    if (!zero) r.add_term(f, c);
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return A_->size() == o.A_->size() && terms_ == o.terms_;
}

Polynomial Polynomial::component(long top_deg) const {
  Polynomial r(A_);
  for (auto& [e, c] : terms_)
    if (A_->top_degree(e) == top_deg) r.terms_.emplace(e, c);
  return r;
}

Polynomial Polynomial::evaluate(const std::vector<Polynomial>& images, AlgebraPtr target) const {
  if (images.size() != A_->size()) throw MathError("evaluate: wrong number of images");
  Polynomial r(target);
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (auto& [e, c] : terms_) {
    Polynomial m = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, PLocal(1)));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      m *= pw[e[i]];
    }
    r += m;
  }
  return r;
}

Polynomial Polynomial::recast(AlgebraPtr target) const {
  if (target->size() != A_->size()) throw MathError("recast: generator count differs");
  Polynomial r(target);
  for (auto& [e, c] : terms_) {
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      int h = target->height(i);
      if (h && e[i] >= h) ok = false;
    }
    if (ok) r.add_term(e, c);
  }
  return r;
}

std::vector<std::pair<Exps, PLocal>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Exps, PLocal>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [&](auto& a, auto& b) { return mono_greater(*A_, a.first, b.first); });
  return ts;
}

std::string monomial_str(const Algebra& A, const Exps& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!first) os << "*";
    first = false;
    os << A.gens()[i].name;
    if (e[i] > 1) os << "^" << e[i];
  }
  return first ? "1" : os.str();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const unsigned p = A_->p();
  for (auto& [e, c0] : sorted_terms()) {
    mpq_class c = c0.value();
    if (A_->mode() == CoeffMode::fp && c > mpq_class(p / 2)) c -= p;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool unit = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (c != 1 || unit) {
      os << c.get_str();
      if (!unit) os << "*";
    }
    if (!unit) os << monomial_str(*A_, e);
  }
  return os.str();
}

}  // namespace chowcob
