#include "chowcob/gralg/groebner.hpp"

#include <algorithm>
#include <tuple>
#include <sstream>

#include "chowcob/coeff/smith.hpp"

namespace chowcob {

namespace {

struct Ord {
  const Algebra& A;
  bool gt(const Exps& a, const Exps& b) const { return mono_greater(A, a, b); }
};

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exps quot(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

bool coprime(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// f - c * m * g
FpPoly sub_mul(const FpPoly& f, std::size_t from, std::uint32_t c, const Exps& m, const FpPoly& g, unsigned p,
               const Ord& ord) {
  FpPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  Exps mg;
  auto shifted = [&](std::size_t k) {
    mg.resize(m.size());
    for (std::size_t t = 0; t < m.size(); ++t) mg[t] = static_cast<std::uint16_t>(m[t] + g[k].m[t]);
  };
  const std::uint64_t neg = p - c;
  bool have = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have) {
      shifted(j);
      have = true;
    }
    if (j >= g.size() || (i < f.size() && ord.gt(f[i].m, mg))) {
      out.push_back(f[i++]);
    } else if (i >= f.size() || ord.gt(mg, f[i].m)) {
      out.push_back({mg, static_cast<std::uint32_t>(neg * g[j].c % p)});
      ++j;
      have = false;
    } else {
      auto v = static_cast<std::uint32_t>((f[i].c + neg * g[j].c) % p);
      if (v) out.push_back({f[i].m, v});
      ++i, ++j;
      have = false;
    }
  }
  return out;
}

void make_monic(FpPoly& f, unsigned p) {
  if (f.empty() || f[0].c == 1) return;
  std::uint64_t inv = inv_mod(f[0].c, p);
  for (auto& t : f) t.c = static_cast<std::uint32_t>(t.c * inv % p);
}

}  // namespace

GroebnerBasis::GroebnerBasis(AlgebraPtr A, const std::vector<Polynomial>& rels, int D) : A_(std::move(A)), D_(D) {
  if (A_->mode() != CoeffMode::fp) throw MathError("groebner_fp needs F_p coefficients");
  if (A_->has_odd() && A_->p() != 2)
    throw MathError("groebner_fp: exterior generators are only supported at p=2");
  for (std::size_t i = 0; i < A_->size(); ++i)
    if (A_->weight(i) <= 0) throw MathError("groebner_fp needs positive generator degrees");
  std::vector<FpPoly> input;
  for (auto& r : rels) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw MathError("relation " + r.str() + " is not homogeneous");
    input.push_back(to_fp(r));
  }
  for (std::size_t i = 0; i < A_->size(); ++i) {
    int h = A_->height(i);
    if (!h) continue;
    Exps e(A_->size(), 0);
    e[i] = static_cast<std::uint16_t>(h);
    input.push_back({{e, 1}});
  }
  build(std::move(input));
}

FpPoly GroebnerBasis::to_fp(const Polynomial& f) const {
  FpPoly out;
  for (auto& [e, c] : f.sorted_terms()) {
    auto v = c.mod_p(A_->p());
    if (v) out.push_back({e, v});
  }
  return out;
}

Polynomial GroebnerBasis::from_fp(const FpPoly& f) const {
  Polynomial r(A_);
  for (auto& t : f) r.add_term(t.m, PLocal(static_cast<long>(t.c)));
  return r;
}

FpPoly GroebnerBasis::reduce(FpPoly f, bool full) const {
  const unsigned p = A_->p();
  Ord ord{*A_};
  FpPoly res;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const FpTerm& t = f[pos];
    const FpPoly* hit = nullptr;
    for (auto& g : G_)
      if (divides(g[0].m, t.m)) {
        hit = &g;
        break;
      }
    if (hit) {
      f = sub_mul(f, pos, t.c, quot(t.m, (*hit)[0].m), *hit, p, ord);
      pos = 0;
    } else {
      if (!full) {
        res.insert(res.end(), f.begin() + static_cast<long>(pos), f.end());
        return res;
      }
      res.push_back(t);
      ++pos;
    }
  }
  return res;
}

void GroebnerBasis::build(std::vector<FpPoly> input) {
  const unsigned p = A_->p();
  struct Item {
    long deg;
    int i, j;  // j < 0 marks an input polynomial with index i
    Exps l;
  };
  std::vector<Item> queue;
  for (std::size_t k = 0; k < input.size(); ++k) {
    long d = A_->weighted_degree(input[k][0].m);
    if (d <= D_) queue.push_back({d, static_cast<int>(k), -1, {}});
  }
  Ord ord{*A_};
  auto pop = [&]() {
    auto it = std::min_element(queue.begin(), queue.end(), [](const Item& a, const Item& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      if ((a.j < 0) != (b.j < 0)) return a.j < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Item x = *it;
    queue.erase(it);
    return x;
  };
  while (!queue.empty()) {
    Item it = pop();
    FpPoly h;
    if (it.j < 0) {
      h = input[it.i];
    } else {
      const FpPoly& a = G_[it.i];
      const FpPoly& b = G_[it.j];
      // S-polynomial of monic a, b
      FpPoly am = sub_mul({}, 0, p - 1, quot(it.l, a[0].m), a, p, ord);  // = m_a * a
      h = sub_mul(am, 0, 1, quot(it.l, b[0].m), b, p, ord);
    }
    h = reduce(std::move(h), false);
    if (h.empty()) continue;
    make_monic(h, p);
    const int k = static_cast<int>(G_.size());
    const Exps& lk = h[0].m;
    // chain criterion on pending pairs
    std::erase_if(queue, [&](const Item& q) {
      if (q.j < 0 || !divides(lk, q.l)) return false;
      return lcm(G_[q.i][0].m, lk) != q.l && lcm(G_[q.j][0].m, lk) != q.l;
    });
    G_.push_back(std::move(h));
    for (int i = 0; i < k; ++i) {
      const Exps& li = G_[i][0].m;
      if (coprime(li, G_[k][0].m)) continue;
      Exps l = lcm(li, G_[k][0].m);
      long d = A_->weighted_degree(l);
      if (d <= D_) queue.push_back({d, i, k, l});
    }
  }
  // minimalize then interreduce
  std::vector<FpPoly> kept;
  for (std::size_t i = 0; i < G_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G_.size() && !redundant; ++j) {
      if (i == j || !divides(G_[j][0].m, G_[i][0].m)) continue;
      redundant = G_[j][0].m != G_[i][0].m || j < i;
    }
    if (!redundant) kept.push_back(G_[i]);
  }
  std::sort(kept.begin(), kept.end(), [&](const FpPoly& a, const FpPoly& b) { return ord.gt(b[0].m, a[0].m); });
  std::vector<FpPoly> reduced;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    G_.clear();
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) G_.push_back(kept[j]);
    FpPoly red = reduce(FpPoly(kept[i].begin() + 1, kept[i].end()), true);
    red.insert(red.begin(), kept[i][0]);
    reduced.push_back(std::move(red));
  }
  G_ = std::move(reduced);
}

std::vector<Polynomial> GroebnerBasis::basis() const {
  std::vector<Polynomial> out;
  for (auto& g : G_) out.push_back(from_fp(g));
  return out;
}

std::vector<Exps> GroebnerBasis::leading_monomials() const {
  std::vector<Exps> out;
  for (auto& g : G_) out.push_back(g[0].m);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.algebra()->size() != A_->size()) throw MathError("normal_form: foreign polynomial");
  for (auto& [e, c] : f.terms())
    if (A_->weighted_degree(e) > D_) throw MathError("normal_form: degree beyond Groebner truncation");
  return from_fp(reduce(to_fp(f.recast(A_)), true));
}

bool GroebnerBasis::is_standard(const Exps& m) const {
  for (auto& g : G_)
    if (divides(g[0].m, m)) return false;
  return true;
}

std::vector<Exps> GroebnerBasis::standard_monomials(long deg) const {
  std::vector<Exps> out;
  for (auto& m : A_->monomials_of_weighted_degree(deg))
    if (is_standard(m)) out.push_back(m);
  return out;
}

std::vector<long> GroebnerBasis::standard_counts() const {
  std::vector<long> out;
  for (int d = 0; d <= D_; ++d) out.push_back(static_cast<long>(standard_monomials(d).size()));
  return out;
}

GroebnerBasis groebner_fp(const AlgebraPtr& A, const std::vector<Polynomial>& rels, int D) {
  return GroebnerBasis(A, rels, D);
}

long HilbertSeries::total() const {
  long s = 0;
  for (long c : coeffs) s += c;
  return s;
}

std::string HilbertSeries::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? " " : "") << coeffs[i];
  return os.str();
}

HilbertSeries hilbert_series(const AlgebraPresentation& P, int D) {
  if (P.mode() != CoeffMode::fp) throw MathError("hilbert_series needs an F_p presentation");
  GroebnerBasis G(P.algebra, P.relations, D);
  return {G.standard_counts(), P.algebra->has_odd()};
}

HilbertSeries ambient_hilbert_series(const Algebra& A, int D) {
  HilbertSeries h;
  h.topological = A.has_odd();
  for (int d = 0; d <= D; ++d) h.coeffs.push_back(static_cast<long>(A.monomials_of_weighted_degree(d).size()));
  return h;
}

RegularityReport regular_sequence_check(const AlgebraPtr& A, const std::vector<Polynomial>& rels, int D) {
  RegularityReport rep;
  for (auto& r : rels) {
    if (r.is_zero()) throw MathError("zero relation in regular sequence check");
    if (!r.is_homogeneous()) throw MathError("relation " + r.str() + " is not homogeneous");
    rep.degrees.push_back(A->weighted_degree(r.terms().begin()->first));
  }
  if (D < 0) {
    D = 0;
    for (long d : rep.degrees) D += static_cast<int>(d);
  }
  rep.bound = D;
  AlgebraPresentation P{A, rels, {}, D, false};
  rep.actual = hilbert_series(P, D).coeffs;
  std::vector<long> e = ambient_hilbert_series(*A, D).coeffs;
  for (long d : rep.degrees)
    for (int k = D; k >= static_cast<int>(d); --k) e[k] -= e[k - d];
  rep.expected = e;
  rep.regular = true;
  for (int k = 0; k <= D; ++k)
    if (rep.actual[k] != rep.expected[k]) {
      rep.regular = false;
      rep.first_mismatch = k;
      break;
    }
  return rep;
}

}  // namespace chowcob
