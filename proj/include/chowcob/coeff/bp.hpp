#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowcob/coeff/plocal.hpp"
#include "chowcob/gralg/graded_module.hpp"

namespace chowcob {

using VExp = std::vector<std::uint16_t>;  // (e_1, ..., e_N)

// Element of Z_(p)[v_1..v_N]
class BPCoeff {
 public:
  BPCoeff(unsigned p, int N);
  static BPCoeff constant(const PLocal& c, unsigned p, int N);
  // v_0 = p
  static BPCoeff v(int i, unsigned p, int N);
  static BPCoeff monomial(VExp e, const PLocal& c, unsigned p, int N);

  unsigned p() const { return p_; }
  int N() const { return N_; }
  const std::map<VExp, PLocal>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // topological degree; throws on zero or inhomogeneous input
  long degree() const;
  static long monomial_degree(const VExp& e, unsigned p);

  BPCoeff& operator+=(const BPCoeff& o);
  BPCoeff& operator-=(const BPCoeff& o);
  friend BPCoeff operator+(BPCoeff a, const BPCoeff& b) { return a += b; }
  friend BPCoeff operator-(BPCoeff a, const BPCoeff& b) { return a -= b; }
  friend BPCoeff operator*(const BPCoeff& a, const BPCoeff& b);
  BPCoeff scaled(const PLocal& c) const;
  bool operator==(const BPCoeff& o) const { return p_ == o.p_ && N_ == o.N_ && terms_ == o.terms_; }

  // v_m -> 1, v_j -> 0 for j != m (m >= 1); m = 0 kills every v_j
  PLocal specialize(int m) const;
  std::string str() const;

 private:
  void check_compat(const BPCoeff& o) const;
  unsigned p_;
  int N_;
  std::map<VExp, PLocal> terms_;
};

struct InvariantIdeal {
  std::string label;
  unsigned p = 2;
  int N = 1;
  std::vector<BPCoeff> gens;
};

InvariantIdeal invariant_ideal(int n, unsigned p, int N);
InvariantIdeal bp_negative(unsigned p, int N);  // BP^{<0} = (v_1..v_N)
InvariantIdeal ideal_product(const InvariantIdeal& I, const InvariantIdeal& J);

// all v-monomials of the given topological degree (degree <= 0)
std::vector<VExp> v_monomials_of_degree(long deg, unsigned p, int N);

// (I_d)/(J_d) per topological degree d in [lo, hi] (even degrees only carry
// classes).  The result is keyed by topological degree.
GradedModule ideal_quotient_module(const InvariantIdeal& I, const InvariantIdeal& J, long lo, long hi);

}  // namespace chowcob
