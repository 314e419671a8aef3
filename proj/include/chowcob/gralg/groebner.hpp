#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowcob/gralg/presentation.hpp"

namespace chowcob {

struct FpTerm {
  Exps m;
  std::uint32_t c;
};
using FpPoly = std::vector<FpTerm>;  // strictly decreasing in the monomial order

// Degree-truncated reduced Groebner basis over F_p.  Degrees are in the
// algebra's weight unit (Chow degree for even algebras).  Exterior and
// height-truncated generators are handled by adding x^h as relations, which
// is only commutative-correct at p = 2 for odd generators.
class GroebnerBasis {
 public:
  GroebnerBasis(AlgebraPtr A, const std::vector<Polynomial>& rels, int D);

  const AlgebraPtr& algebra() const { return A_; }
  int bound() const { return D_; }
  std::vector<Polynomial> basis() const;
  std::vector<Exps> leading_monomials() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool is_standard(const Exps& m) const;
  // standard monomials per weighted degree 0..D
  std::vector<long> standard_counts() const;
  std::vector<Exps> standard_monomials(long deg) const;

 private:
  FpPoly to_fp(const Polynomial& f) const;
  Polynomial from_fp(const FpPoly& f) const;
  FpPoly reduce(FpPoly f, bool full) const;
  void build(std::vector<FpPoly> input);

  AlgebraPtr A_;
  int D_;
  std::vector<FpPoly> G_;
};

GroebnerBasis groebner_fp(const AlgebraPtr& A, const std::vector<Polynomial>& rels, int D);

struct HilbertSeries {
  std::vector<long> coeffs;  // index = degree (Chow, or topological when odd generators exist)
  bool topological = false;
  long total() const;
  std::string str() const;
};

HilbertSeries hilbert_series(const AlgebraPresentation& P, int D);
// Hilbert series of the ambient algebra with no relations
HilbertSeries ambient_hilbert_series(const Algebra& A, int D);

struct RegularityReport {
  bool regular = false;
  std::vector<long> degrees;  // relation degrees
  std::vector<long> actual, expected;
  int first_mismatch = -1;
  int bound = 0;
};

// Hilbert series of A/(rels) against prod(1 - T^{d_i}) * H_A(T) through D.
// D < 0 selects the sum of the relation degrees (beyond the socle of a
// complete intersection).
RegularityReport regular_sequence_check(const AlgebraPtr& A, const std::vector<Polynomial>& rels, int D = -1);

}  // namespace chowcob
