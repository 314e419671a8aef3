#include <doctest.h>

#include "chowcob/steenrod/bundled.hpp"
#include "chowcob/steenrod/checks.hpp"

using namespace chowcob;

namespace {

// C(m, k) mod p by Lucas
unsigned binom_mod(long m, long k, unsigned p) {
  unsigned r = 1;
  while (m || k) {
    long a = m % p, b = k % p;
    if (b > a) return 0;
    long c = 1;
    for (long i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    r = static_cast<unsigned>((r * (c % p)) % p);
    m /= p, k /= p;
  }
  return r;
}

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

TEST_CASE("reduced powers on y^m follow the binomial rule") {
  for (unsigned p : {2u, 3u, 5u}) {
    auto T = bzp_table(1, p);
    auto A = T.algebra();
    auto y = Polynomial::generator(A, "y1");
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m + 1; ++k) {
        auto got = apply_power(k, y.pow(m), T);
        auto want = y.pow(m + (p - 1) * k).scaled(PLocal(binom_mod(m, k, p)));
        CHECK_MESSAGE(got == want, "p=" << p << " m=" << m << " k=" << k);
      }
  }
}

TEST_CASE("Milnor primitives on B(Z/p)") {
  for (unsigned p : {2u, 3u}) {
    auto T = bzp_table(2, p);
    auto A = T.algebra();
    auto x = Polynomial::generator(A, "x1"), y = Polynomial::generator(A, "y1");
    CHECK(apply_Q(0, x, T) == y);
    CHECK(apply_Q(1, x, T) == y.pow(p).scaled(PLocal(-1)));
    CHECK(apply_Q(0, y, T).is_zero());
    // derivation on x*y^3
    CHECK(apply_Q(1, x * y.pow(3), T) == apply_Q(1, x, T) * y.pow(3));
  }
}

TEST_CASE("recursion, square-zero, Leibniz and Cartan") {
  for (unsigned p : {2u, 3u}) {
    auto T = bzp_table(2, p);
    auto r = verify_Q_recursion(T, 1, 6);
    CHECK(r.ok);
    CHECK(r.checked > 0);
    CHECK(check_Q_squared(T, 6).ok);
    CHECK(check_derivation(T, 30, 6).ok);
    CHECK(check_cartan(T, 30, 6).ok);
  }
}

TEST_CASE("recursion detects a broken table") {
  auto T = bzp_table(1, 3);
  T.set_Q(2, "x1", Polynomial(T.algebra()));
  auto r = verify_Q_recursion(T, 1, 10, Exec::serial);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_i == 1);
  CHECK(r.counterexample.has_value());
  CHECK(verify_Q_recursion(T, 0, 10).ok);
}

TEST_CASE("recursion needs Q_{i+1}") {
  auto T = bzp_table(1, 2, 1);
  CHECK_THROWS(verify_Q_recursion(T, 1, 4));
}

TEST_CASE("milnor composite of a product of exterior classes") {
  auto T = bzp_table(1, 2);
  auto A = T.algebra();
  auto x = Polynomial::generator(A, "x1"), y = Polynomial::generator(A, "y1");
  // Q_0..^Q_1: just Q_0 x = y
  CHECK(milnor_composite(1, 1, x, T) == y);
  CHECK(milnor_composite(0, 1, x, T) == y.pow(2));
}

TEST_CASE("table json round trip") {
  auto T = bzp_table(2, 3);
  auto U = table_from_json(table_to_json(T));
  auto f = T.parse("x1*y2^2 + x2*y1");
  auto g = U.parse("x1*y2^2 + x2*y1");
  CHECK(apply_Q(1, f, T).str() == apply_Q(1, g, U).str());
  CHECK(apply_power(2, f, T).str() == apply_power(2, g, U).str());
}

TEST_CASE("bundled tables validate") {
  for (auto key : {"g2", "f4", "so_7", "so_9"}) CHECK_NOTHROW(bundled_table(key).validate());
  CHECK_NOTHROW(bundled_table("bzp_2", 3).validate());
  CHECK_THROWS(bundled_table("nope"));
}

TEST_CASE("SO(m) Steenrod image small m") {
  for (int m : {5, 7, 9, 11, 13, 15, 17}) {
    auto img = so_steenrod_image(m);
    CHECK_FALSE(img.empty());
    for (auto& [i, hit] : img) CHECK_MESSAGE(hit == !power_of_two(i + 1), "m=" << m << " i=" << i);
  }
}

TEST_CASE("monomial sample starts with generators") {
  auto T = bzp_table(1, 2);
  auto s = monomial_sample(T, 4);
  REQUIRE(s.size() >= 2);
  CHECK(s[0].size() == 1);
  for (auto& f : s) CHECK(f.top_degree() <= 4);
}
