#include "chowcob/coeff/plocal.hpp"

namespace chowcob {

namespace {

int zval(mpz_class n, unsigned p) {
  int v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace

PLocal PLocal::from_fraction(const mpz_class& num, const mpz_class& den, unsigned p) {
  if (den == 0) throw MathError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(q, p);
}

PLocal PLocal::from_rational(const mpq_class& q, unsigned p) {
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), p))
    throw MathError("denominator " + q.get_den().get_str() + " is divisible by p=" + std::to_string(p));
  return PLocal(q);
}

int PLocal::valuation(unsigned p) const {
  if (is_zero()) return -1;
  return zval(q_.get_num(), p);
}

PLocal PLocal::unit_part(unsigned p) const {
  if (is_zero()) return *this;
  mpz_class n = q_.get_num();
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
  return PLocal(mpq_class(n, q_.get_den()));
}

PLocal PLocal::div_exact(const PLocal& b, unsigned p) const {
  if (b.is_zero()) throw MathError("division by zero");
  if (is_zero()) return *this;
  if (valuation(p) < b.valuation(p)) throw MathError("quotient is not p-integral");
  return PLocal(mpq_class(q_ / b.q_));
}

PLocal PLocal::div_unit(const PLocal& b, unsigned p) const {
  if (!b.is_unit(p)) throw MathError("divisor " + b.str() + " is not a p-adic unit");
  return PLocal(mpq_class(q_ / b.q_));
}

unsigned PLocal::mod_p(unsigned p) const {
  mpz_class n = q_.get_num() % p;
  if (n < 0) n += p;
  mpz_class d = q_.get_den() % p;
  mpz_class inv;
  mpz_class pm(p);
  if (!mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pm.get_mpz_t()))
    throw MathError("denominator not invertible mod p");
  mpz_class r = (n * inv) % p;
  return static_cast<unsigned>(r.get_ui());
}

std::string PLocal::str() const { return q_.get_str(); }

mpz_class ipow(const mpz_class& b, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

long long ipow_ll(long long b, unsigned e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw MathError(std::to_string(p) + " is not prime");
}

}  // namespace chowcob
