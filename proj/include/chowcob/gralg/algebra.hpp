#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chowcob/coeff/plocal.hpp"

namespace chowcob {

enum class Parity { even, odd };
enum class CoeffMode { fp, zp };

struct GeneratorSpec {
  std::string name;
  int top_degree = 2;
  Parity parity = Parity::even;
  // g^height = 0 when height > 0; odd generators behave as height 2
  int height = 0;
};

using Exps = std::vector<std::uint16_t>;

class Algebra {
 public:
  Algebra(unsigned p, CoeffMode mode, std::vector<GeneratorSpec> gens);

  unsigned p() const { return p_; }
  CoeffMode mode() const { return mode_; }
  const std::vector<GeneratorSpec>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<std::size_t> index(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;
  bool odd(std::size_t i) const { return gens_[i].parity == Parity::odd; }
  bool has_odd() const { return has_odd_; }
  bool all_positive() const;
  // exponent bound (exclusive); 0 means unbounded
  int height(std::size_t i) const { return odd(i) ? 2 : gens_[i].height; }

  // unit used by Groebner/Hilbert gradings: Chow degree when every generator
  // is even, topological degree otherwise
  int weight(std::size_t i) const { return has_odd_ ? gens_[i].top_degree : gens_[i].top_degree / 2; }
  long top_degree(const Exps& e) const;
  long weighted_degree(const Exps& e) const;

  // product of monomials: returns 0 if the product vanishes, otherwise the
  // Koszul sign, and writes the exponent vector to out
  int mono_mul(const Exps& a, const Exps& b, Exps& out) const;

  PLocal normalize(const PLocal& c) const;

  // all monomials of the given topological degree (positive generators only)
  std::vector<Exps> monomials_of_top_degree(long deg) const;
  std::vector<Exps> monomials_of_weighted_degree(long deg) const;

  // copy with a different coefficient mode
  std::shared_ptr<const Algebra> with_mode(CoeffMode m) const;

 private:
  unsigned p_;
  CoeffMode mode_;
  std::vector<GeneratorSpec> gens_;
  std::map<std::string, std::size_t> idx_;
  bool has_odd_ = false;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;
AlgebraPtr make_algebra(unsigned p, CoeffMode mode, std::vector<GeneratorSpec> gens);

// grevlex on weighted degree, ties broken with the last generator first
bool mono_greater(const Algebra& A, const Exps& a, const Exps& b);

class Polynomial {
 public:
  explicit Polynomial(AlgebraPtr A);
  static Polynomial constant(AlgebraPtr A, const PLocal& c);
  static Polynomial generator(AlgebraPtr A, const std::string& name);
  static Polynomial generator(AlgebraPtr A, std::size_t i);
  static Polynomial monomial(AlgebraPtr A, Exps e, const PLocal& c = PLocal(1));

  const AlgebraPtr& algebra() const { return A_; }
  const std::map<Exps, PLocal>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_homogeneous() const;
  // topological degree; throws on zero or inhomogeneous input
  long top_degree() const;
  long chow_degree() const;
  PLocal coeff(const Exps& e) const;

  void add_term(const Exps& e, const PLocal& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return scaled(PLocal(-1)); }
  Polynomial scaled(const PLocal& c) const;
  Polynomial pow(unsigned k) const;
  // F_p mode only: f -> f^p computed termwise
  Polynomial frobenius() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // homogeneous component of the given topological degree
  Polynomial component(long top_deg) const;
  // ring map sending generator i to images[i] (images live in the target)
  Polynomial evaluate(const std::vector<Polynomial>& images, AlgebraPtr target) const;
  // same expression, coefficients reduced into another algebra with the same generators
  Polynomial recast(AlgebraPtr target) const;

  // terms sorted by the monomial order, largest first
  std::vector<std::pair<Exps, PLocal>> sorted_terms() const;
  std::string str() const;

 private:
  void check_same(const Polynomial& o) const;
  AlgebraPtr A_;
  std::map<Exps, PLocal> terms_;
};

std::string monomial_str(const Algebra& A, const Exps& e);

}  // namespace chowcob
