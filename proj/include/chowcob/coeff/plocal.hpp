#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chowcob {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational whose denominator is prime to a fixed p.  The prime itself is
// not stored: every operation here keeps p-locality, and the entry points that
// could break it (from_fraction, div_unit) take p explicitly.
class PLocal {
 public:
  PLocal() = default;
  PLocal(long n) : q_(n) {}  // NOLINT
  explicit PLocal(const mpz_class& n) : q_(n) {}

  static PLocal from_fraction(const mpz_class& num, const mpz_class& den, unsigned p);
  static PLocal from_rational(const mpq_class& q, unsigned p);

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  // p-adic valuation; -1 for zero
  int valuation(unsigned p) const;
  bool is_unit(unsigned p) const { return !is_zero() && valuation(p) == 0; }
  // x / p^v(x)
  PLocal unit_part(unsigned p) const;
  // b must be a p-adic unit times p^k with k <= v(a); throws otherwise
  PLocal div_exact(const PLocal& b, unsigned p) const;
  PLocal div_unit(const PLocal& b, unsigned p) const;
  // image in F_p as 0..p-1
  unsigned mod_p(unsigned p) const;

  PLocal operator-() const { return PLocal(mpq_class(-q_)); }
  PLocal& operator+=(const PLocal& o) { q_ += o.q_; return *this; }
  PLocal& operator-=(const PLocal& o) { q_ -= o.q_; return *this; }
  PLocal& operator*=(const PLocal& o) { q_ *= o.q_; return *this; }
  friend PLocal operator+(PLocal a, const PLocal& b) { return a += b; }
  friend PLocal operator-(PLocal a, const PLocal& b) { return a -= b; }
  friend PLocal operator*(PLocal a, const PLocal& b) { return a *= b; }
  friend bool operator==(const PLocal& a, const PLocal& b) { return a.q_ == b.q_; }
  friend bool operator!=(const PLocal& a, const PLocal& b) { return a.q_ != b.q_; }

  std::string str() const;

 private:
  explicit PLocal(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_{0};
};

mpz_class ipow(const mpz_class& b, unsigned e);
long long ipow_ll(long long b, unsigned e);
bool is_prime(unsigned p);
void require_prime(unsigned p);

}  // namespace chowcob
