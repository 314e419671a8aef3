#include <map>

#include "chowcob/gralg/presentation.hpp"

namespace chowcob {

namespace {

void check_gradable(const AlgebraPresentation& P) {
  const Algebra& A = *P.algebra;
  if (A.has_odd()) throw MathError("graded_groups needs even generators (Chow grading)");
  if (!A.all_positive()) throw MathError("graded_groups needs positive generator degrees");
  for (auto& r : P.relations)
    if (!r.is_homogeneous()) throw MathError("relation " + r.str() + " is not homogeneous");
}

DegreeGroup piece(const AlgebraPresentation& P, int d) {
  const AlgebraPtr& A = P.algebra;
  auto basis = A->monomials_of_top_degree(2L * d);
  DegreeGroup out;
  if (basis.empty()) return out;
  std::map<Exps, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;

  std::vector<Polynomial> gens;
  for (auto& r : P.relations) {
    if (r.is_zero()) continue;
    long e = r.top_degree();
    for (auto& m : A->monomials_of_top_degree(2L * d - e)) {
      Polynomial g = Polynomial::monomial(A, m) * r;
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  }
  const unsigned p = A->p();
  if (A->mode() == CoeffMode::fp) {
    FpMatrix M(gens.size(), std::vector<std::uint32_t>(basis.size(), 0));
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (auto& [e, c] : gens[j].terms()) M[j][idx.at(e)] = c.mod_p(p);
    out.free_rank = static_cast<long>(basis.size() - rank_fp(std::move(M), p));
    return out;
  }
  Matrix M(basis.size(), std::vector<PLocal>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (auto& [e, c] : gens[j].terms()) M[idx.at(e)][j] = c;
  auto ck = cokernel_zp(M, basis.size(), p);
  out.free_rank = ck.free_rank;
  out.torsion = ck.torsion;
  return out;
}

}  // namespace

GradedModule graded_groups(const AlgebraPresentation& P, int lo, int hi, Exec ex) {
  check_gradable(P);
  int D = P.effective_truncation();
  if (hi > D && !P.partial)
    throw MathError("degree " + std::to_string(hi) + " exceeds truncation D=" + std::to_string(D));
  GradedModule out(P.p());
  if (hi < lo) return out;
  std::vector<DegreeGroup> res(static_cast<std::size_t>(hi - lo + 1));
  for_each_index(res.size(), ex, [&](std::size_t i) { res[i] = piece(P, lo + static_cast<int>(i)); });
  for (std::size_t i = 0; i < res.size(); ++i) out.add(lo + static_cast<int>(i), res[i]);
  return out;
}

GradedModule graded_groups_serial(const AlgebraPresentation& P, int lo, int hi) {
  return graded_groups(P, lo, hi, Exec::serial);
}

}  // namespace chowcob
