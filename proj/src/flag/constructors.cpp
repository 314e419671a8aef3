#include "chowcob/flag/constructors.hpp"

#include <algorithm>

#include "chowcob/gralg/groebner.hpp"

namespace chowcob {

DimSeries fp_dims(const AlgebraPresentation& P, int D) {
  HilbertSeries h = hilbert_series(P, D);
  DimSeries out;
  for (std::size_t d = 0; d < h.coeffs.size(); ++d)
    if (h.coeffs[d]) out[static_cast<int>(d)] = h.coeffs[d];
  return out;
}

TypeITwisted type_I_twisted(const AlgebraPtr& St, const std::vector<Polynomial>& bbars, int D) {
  const unsigned p = St->p();
  const std::size_t first = 2 * (p - 1);
  if (bbars.size() < first)
    throw MathError("type_I_twisted needs at least 2p-2 = " + std::to_string(first) + " relations");
  AlgebraPtr A = St->mode() == CoeffMode::fp ? St : St->with_mode(CoeffMode::fp);
  std::vector<Polynomial> b;
  long sum = 0, top = 0;
  for (auto& f : bbars) {
    Polynomial g = f.algebra() == A ? f : f.recast(A);
    if (g.is_zero() || !g.is_homogeneous()) throw MathError("bbar relations must be nonzero and homogeneous");
    b.push_back(g);
    sum += g.chow_degree();
    top = std::max(top, g.chow_degree());
  }
  if (D < 0) D = static_cast<int>(sum + top);
  TypeITwisted out;
  out.presentation.algebra = A;
  out.st_bar.algebra = A;
  for (std::size_t i = 0; i < first; ++i)
    for (std::size_t j = i; j < first; ++j) out.presentation.relations.push_back(b[i] * b[j]);
  for (std::size_t k = first; k < b.size(); ++k) out.presentation.relations.push_back(b[k]);
  out.st_bar.relations = b;
  out.presentation.truncation = D;
  out.st_bar.truncation = D;
  DimSeries core{{0, 1}};
  for (std::size_t i = 0; i < first; ++i) core[static_cast<int>(b[i].chow_degree())] += 1;
  DimSeries full = tensor_dims(core, fp_dims(out.st_bar, D));
  for (auto& [d, n] : full)
    if (d <= D) out.comparison[d] = n;
  return out;
}

AdditiveReport compare_dims(const DimSeries& expected, const DimSeries& actual, int lo, int hi) {
  AdditiveReport r;
  for (auto& [d, n] : expected)
    if (d >= lo && d <= hi) r.expected[d] = n;
  for (auto& [d, n] : actual)
    if (d >= lo && d <= hi) r.actual[d] = n;
  if (r.expected != r.actual) {
    r.ok = false;
    for (int d = lo; d <= hi; ++d) {
      auto a = r.expected.count(d) ? r.expected.at(d) : 0;
      auto b = r.actual.count(d) ? r.actual.at(d) : 0;
      if (a != b) {
        r.first_mismatch = d;
        break;
      }
    }
  }
  return r;
}

AdditiveReport psz_additive_check(const GradedModule& core, const GradedModule& cofactor, const GradedModule& target,
                                  int lo, int hi) {
  return compare_dims(tensor_dims(core.mod_p_dims(), cofactor.mod_p_dims()), target.mod_p_dims(), lo, hi);
}

}  // namespace chowcob
