#include "chowcob/flag/quadric.hpp"

#include <algorithm>
#include <sstream>

#include "chowcob/motive/modules.hpp"

namespace chowcob {

std::vector<int> QuadricSpec::d() const {
  std::vector<int> out(static_cast<std::size_t>(l), anisotropic ? 1 : 0);
  if (!anisotropic) return out;
  for (int i = 0; i < l; ++i)
    for (auto& [j, fj] : f)
      if (fj <= i) ++out[static_cast<std::size_t>(i)];
  return out;
}

QuadricSpec QuadricSpec::from_d(int l, const std::vector<int>& d) {
  if (l < 1 || d.size() != static_cast<std::size_t>(l)) throw MathError("need one d_i per 0 <= i < l");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1) throw MathError("anisotropic quadric needs d_i >= 1");
    if (i && d[i] < d[i - 1]) throw MathError("d_i must be nondecreasing (h lies in the restriction image)");
  }
  QuadricSpec s;
  s.l = l;
  for (int j = 1; j < d.back(); ++j)
    for (int i = 0; i < l; ++i)
      if (d[static_cast<std::size_t>(i)] >= j + 1) {
        s.f[j] = i;
        break;
      }
  return s;
}

QuadricSpec QuadricSpec::pfister_max(int n) {
  if (n < 1) throw MathError("Pfister neighbor needs n >= 1");
  int l = (1 << n) - 1;
  return from_d(l, std::vector<int>(static_cast<std::size_t>(l), n));
}

QuadricSpec QuadricSpec::pfister_min(int n) {
  if (n < 2) throw MathError("minimal neighbor needs n >= 2");
  int l = 1 << (n - 1);
  std::vector<int> d(static_cast<std::size_t>(l), n - 1);
  d.back() = n;
  return from_d(l, d);
}

QuadricSpec QuadricSpec::split(int l) {
  QuadricSpec s;
  s.l = l;
  s.anisotropic = false;
  return s;
}

namespace {

void validate(const QuadricSpec& s) {
  if (s.l < 1) throw MathError("quadric needs l >= 1");
  if (!s.anisotropic) return;
  int expect = 1, prev = 0;
  for (auto& [j, fj] : s.f) {
    if (j != expect++) throw MathError("f_j must be given for j = 1..s without gaps");
    if (fj < 0 || fj > s.l - 1) throw MathError("f_" + std::to_string(j) + " outside 0..l-1");
    if (fj < prev) throw MathError("f_list violates monotonicity of d_i at j = " + std::to_string(j));
    prev = fj;
  }
}

}  // namespace

DegvTable quadric_degv_table(const QuadricSpec& s) {
  DegvTable t;
  t.p = 2;
  auto d = s.d();
  for (int i = 0; i < s.l; ++i) {
    std::string h = i == 0 ? "1" : i == 1 ? "h" : "h^" + std::to_string(i);
    t.gens.push_back(DegvGenerator::make(h, i, {"y in Res"}));
    t.gens.push_back(DegvGenerator::make(i == 0 ? "y" : h + "y", s.l + i, {"deg_v = " + std::to_string(d[static_cast<std::size_t>(i)])}));
  }
  return t;
}

QuadricResult quadric_qx(const QuadricSpec& s) {
  validate(s);
  QuadricResult r;
  r.spec = s;
  const int l = s.l;
  r.closed_form = GradedModule(2);
  for (int k = 0; k < 2 * l; ++k) r.closed_form.add_free(k);
  if (!s.anisotropic) {
    auto A = make_algebra(2, CoeffMode::zp, {{"h", 2, Parity::even, 0}, {"y", 2 * l, Parity::even, 0}});
    Polynomial h = Polynomial::generator(A, "h"), y = Polynomial::generator(A, "y");
    r.presentation.algebra = A;
    r.presentation.relations = {h.pow(static_cast<unsigned>(l)) - y.scaled(PLocal(2)), y * y};
  } else {
    std::vector<GeneratorSpec> gens{{"h", 2, Parity::even, 0}};
    for (auto& [j, fj] : s.f) {
      int deg = fj + l - ((1 << j) - 1);
      if (deg < 1) throw MathError("u_" + std::to_string(j) + " would sit in Chow degree " + std::to_string(deg));
      r.u_degree[j] = deg;
      gens.push_back({"u" + std::to_string(j), 2 * deg, Parity::even, 0});
      for (int k = 0; k < l - fj; ++k) r.closed_form.add_torsion(deg + k, 1);
    }
    auto A = make_algebra(2, CoeffMode::zp, gens);
    Polynomial h = Polynomial::generator(A, "h");
    r.presentation.algebra = A;
    r.presentation.relations.push_back(h.pow(static_cast<unsigned>(2 * l)));
    for (auto& [j, fj] : s.f) {
      Polynomial u = Polynomial::generator(A, "u" + std::to_string(j));
      r.presentation.relations.push_back(u.scaled(PLocal(2)));
      r.presentation.relations.push_back(h.pow(static_cast<unsigned>(l - fj)) * u);
      for (auto& [i, fi] : s.f)
        if (i <= j) r.presentation.relations.push_back(Polynomial::generator(A, "u" + std::to_string(i)) * u);
    }
  }
  r.from_groups = graded_groups(r.presentation, 0, 2 * l);
  if (s.anisotropic) {
    r.from_degv = qx_module(degv_infer(quadric_degv_table(s)));
    auto d = s.d();
    r.alt_form_agrees = true;
    for (int i = 0; i < l; ++i) {
      int di = d[static_cast<std::size_t>(i)];
      r.J.push_back(l + i - ((1 << di) - 1));
      if (l < 30 && r.J.back() != i + (1 << l) - (1 << di)) r.alt_form_agrees = false;
    }
    auto sorted = r.J;
    std::sort(sorted.begin(), sorted.end());
    r.partition = true;
    for (int i = 0; i < l; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i) r.partition = false;
  } else {
    r.from_degv = GradedModule(2);
    for (int i = 0; i < l; ++i) {
      r.from_degv.add_free(i);
      r.from_degv.add_free(l + i);
    }
  }
  return r;
}

EmbeddingReport quadric_embedding_bounds(const std::map<int, int>& fX, const std::map<int, int>& fY, int d) {
  EmbeddingReport r;
  for (auto& [j, fx] : fX) {
    auto it = fY.find(j);
    if (it == fY.end()) throw MathError("f_" + std::to_string(j) + " missing for Y");
    if (fx < it->second - d || fx > it->second + d) {
      r.ok = false;
      r.failing.push_back(j);
    }
  }
  for (auto& [j, fy] : fY)
    if (!fX.count(j)) throw MathError("f_" + std::to_string(j) + " missing for X");
  return r;
}

bool vishik_membership(const std::set<int>& J, const std::set<int>& monomial, int l) {
  for (int i : J)
    if (i < 1 || i > l) throw MathError("index " + std::to_string(i) + " outside 1.." + std::to_string(l));
  for (int i : monomial) {
    if (i < 1 || i > l) throw MathError("index " + std::to_string(i) + " outside 1.." + std::to_string(l));
    if (!J.count(i)) return false;
  }
  return true;
}

namespace {

std::string zname(const std::set<int>& s) {
  std::string out = "z{";
  bool first = true;
  for (int i : s) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string ZProduct::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto& t : terms) out += (out.empty() ? "" : " + ") + zname(t);
  return out;
}

ZProduct z_product(const std::set<int>& I, int j, int l) {
  if (j < 1 || j > l) throw MathError("j outside 1..l");
  for (int i : I)
    if (i < 1 || i > l) throw MathError("I not contained in 1..l");
  ZProduct r;
  std::map<std::set<int>, int> acc;
  auto push = [&](std::set<int> base, int add, const std::string& what) {
    if (add > l) {
      r.dropped.push_back(what + ": index " + std::to_string(add) + " > l");
      return;
    }
    if (!base.insert(add).second) {
      r.dropped.push_back(what + ": repeated index " + std::to_string(add));
      return;
    }
    acc[base] ^= 1;
  };
  push(I, j, "I u j");
  for (int i : I) {
    std::set<int> rest = I;
    rest.erase(i);
    push(rest, i + j, "(I-" + std::to_string(i) + ") u " + std::to_string(i + j));
  }
  for (auto& [s, c] : acc)
    if (c) r.terms.push_back(s);
  return r;
}

}  // namespace chowcob
