#include "chowcob/motive/modules.hpp"

#include <map>
#include <set>

namespace chowcob {

MnModule mn_module(int n, unsigned p, int deg_y) {
  require_prime(p);
  if (n < -1) throw MathError("mn_module: n must be >= -1");
  MnModule M{n, p, deg_y, GradedModule(p)};
  if (n == -1) return M;
  if (n >= 1) {
    long low = deg_y - (ipow_ll(p, static_cast<unsigned>(n - 1)) - 1);
    if (low <= 0)
      throw MathError("degree underflow: c_" + std::to_string(n - 1) + " of M_" + std::to_string(n) + "(y) would sit in degree " +
                      std::to_string(low) + " (deg_v(y) <= n once |y| <= p^n - 1)");
  }
  M.module.add_free(deg_y);
  for (int i = 1; i < n; ++i) M.module.add_torsion(static_cast<int>(deg_y - (ipow_ll(p, static_cast<unsigned>(i)) - 1)), 1);
  return M;
}

GradedModule ideal_pattern_module(const InvariantIdeal& J, int deg_y) {
  InvariantIdeal K = ideal_product(bp_negative(J.p, J.N), J);
  GradedModule Q = ideal_quotient_module(J, K, -2L * deg_y + 2, 0);
  GradedModule out(J.p);
  for (auto& [d, g] : Q.groups()) out.add(deg_y + d / 2, g);
  return out;
}

InvariantIdeal ideal_p_v1sq(unsigned p, int N) {
  InvariantIdeal J{"(p,v1^2)", p, N, {}};
  J.gens.push_back(BPCoeff::v(0, p, N));
  J.gens.push_back(BPCoeff::v(1, p, N) * BPCoeff::v(1, p, N));
  return J;
}

InvariantIdeal ideal_p2_pv1_v1sq(unsigned p, int N) {
  InvariantIdeal J{"(p^2,p*v1,v1^2)", p, N, {}};
  auto v0 = BPCoeff::v(0, p, N), v1 = BPCoeff::v(1, p, N);
  J.gens = {v0 * v0, v0 * v1, v1 * v1};
  return J;
}

long rost_b(int n, unsigned p) { return (ipow_ll(p, static_cast<unsigned>(n)) - 1) / (p - 1); }

GradedModule rost_chow(int n, unsigned p) {
  if (n < 1) throw MathError("rost_chow needs n >= 1");
  require_prime(p);
  GradedModule out(p);
  out.add_free(0);
  long b = rost_b(n, p);
  for (unsigned i = 1; i < p; ++i) out = out.direct_sum(mn_module(n, p, static_cast<int>(i * b)).module);
  return out;
}

long BPModulePresentation::relation_degree(const BPRelation& r) const {
  std::set<long> ds;
  for (auto& [g, c] : r.terms) {
    if (c.is_zero()) continue;
    ds.insert(gens.at(g).chow_deg + c.degree() / 2);
  }
  if (ds.size() != 1) throw MathError("inhomogeneous or empty BP relation");
  return *ds.begin();
}

BPModulePresentation rost_res_omega(int n, unsigned p, int N) {
  if (n < 1) throw MathError("rost_res_omega needs n >= 1");
  if (N == 0) N = std::max(n, 1);
  if (n - 1 > N) throw MathError("rost_res_omega: n exceeds truncation");
  BPModulePresentation M;
  M.p = p;
  M.N = N;
  M.gens.push_back({"1", 0});
  long b = rost_b(n, p);
  std::map<std::pair<int, unsigned>, std::size_t> at;
  for (unsigned i = 1; i < p; ++i)
    for (int j = 0; j < n; ++j) {
      std::string yi = i == 1 ? "y" : "y^" + std::to_string(i);
      std::string v = j == 0 ? std::to_string(p) : "v" + std::to_string(j);
      at[{j, i}] = M.gens.size();
      M.gens.push_back({v + "*" + yi, static_cast<int>(i * b - (ipow_ll(p, static_cast<unsigned>(j)) - 1) * (j > 0))});
    }
  for (unsigned i = 1; i < p; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        // v_j (v_k y^i) = v_k (v_j y^i)
        BPRelation r;
        r.terms.push_back({at[{k, i}], BPCoeff::v(j, p, N)});
        r.terms.push_back({at[{j, i}], BPCoeff::v(k, p, N).scaled(PLocal(-1))});
        M.rels.push_back(r);
      }
  return M;
}

GradedModule morava_localize(const BPModulePresentation& M, int m) {
  if (m < 0 || m > M.N) throw MathError("morava_localize: index outside truncation");
  const unsigned p = M.p;
  const long period = m == 0 ? 0 : ipow_ll(p, static_cast<unsigned>(m)) - 1;
  auto cls = [&](long d) -> int {
    if (!period) return static_cast<int>(d);
    long r = d % period;
    return static_cast<int>(r < 0 ? r + period : r);
  };
  std::map<int, std::vector<std::size_t>> gens_of;
  for (std::size_t g = 0; g < M.gens.size(); ++g) gens_of[cls(M.gens[g].chow_deg)].push_back(g);
  std::map<int, std::vector<const BPRelation*>> rels_of;
  for (auto& r : M.rels) rels_of[cls(M.relation_degree(r))].push_back(&r);
  GradedModule out(p);
  for (auto& [c, gs] : gens_of) {
    std::map<std::size_t, std::size_t> row;
    for (std::size_t i = 0; i < gs.size(); ++i) row[gs[i]] = i;
    auto& rs = rels_of[c];
    Matrix A(gs.size(), std::vector<PLocal>(rs.size()));
    for (std::size_t j = 0; j < rs.size(); ++j)
      for (auto& [g, coef] : rs[j]->terms) {
        PLocal s = coef.specialize(m);
        if (!s.is_zero()) A[row.at(g)][j] += s;
      }
    out.add(c, cokernel_zp(A, gs.size(), p));
  }
  return out;
}

MarkedModule marked_mn(int n, unsigned p, int deg_y, const std::string& block) {
  auto M = mn_module(n, p, deg_y);
  MarkedModule out;
  if (n >= 0) out.push_back({block, "c0", deg_y, 0});
  for (int i = 1; i < n; ++i)
    out.push_back({block, "c" + std::to_string(i), static_cast<int>(deg_y - (ipow_ll(p, static_cast<unsigned>(i)) - 1)), 1});
  return out;
}

GradedModule marked_to_graded(const MarkedModule& A, unsigned p) {
  GradedModule g(p);
  for (auto& c : A) {
    if (c.k == 0)
      g.add_free(c.chow_deg);
    else
      g.add_torsion(c.chow_deg, c.k);
  }
  return g;
}

namespace {

void check_markers(const MarkedModule& A) {
  std::map<std::string, std::pair<int, int>> seen;  // block -> (#c0, #c1)
  for (auto& c : A) {
    if (c.marker == "c0") ++seen[c.block].first;
    if (c.marker == "c1") ++seen[c.block].second;
  }
  for (auto& [b, cnt] : seen)
    if (cnt.first > 1 || cnt.second > 1 || (cnt.second && !cnt.first))
      throw MathError("marker mismatch in block " + b);
}

}  // namespace

GradedModule product_type_I(const MarkedModule& A, const MarkedModule& B, unsigned p) {
  check_markers(A);
  check_markers(B);
  struct Cell {
    std::size_t a, b;
    int k;
  };
  std::map<int, std::vector<Cell>> by_deg;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      int k = A[i].k && B[j].k ? std::min(A[i].k, B[j].k) : std::max(A[i].k, B[j].k);
      by_deg[A[i].chow_deg + B[j].chow_deg].push_back({i, j, k});
    }
  auto find = [](const MarkedModule& M, const std::string& block, const std::string& mk) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < M.size(); ++i)
      if (M[i].block == block && M[i].marker == mk) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  GradedModule out(p);
  for (auto& [d, cells] : by_deg) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
    for (std::size_t r = 0; r < cells.size(); ++r) idx[{cells[r].a, cells[r].b}] = r;
    std::vector<std::vector<PLocal>> cols;
    for (auto& c : cells)
      if (c.k) {
        std::vector<PLocal> col(cells.size());
        col[idx[{c.a, c.b}]] = PLocal(ipow(mpz_class(p), static_cast<unsigned>(c.k)));
        cols.push_back(col);
      }
    // c0_s (x) c1_t - c1_s (x) c0_t for every pair of marked blocks
    std::set<std::pair<std::string, std::string>> done;
    for (auto& c : cells) {
      const auto& s = A[c.a].block;
      const auto& t = B[c.b].block;
      if (!done.insert({s, t}).second) continue;
      auto a0 = find(A, s, "c0"), a1 = find(A, s, "c1"), b0 = find(B, t, "c0"), b1 = find(B, t, "c1");
      if (a0 < 0 || a1 < 0 || b0 < 0 || b1 < 0) continue;
      auto l = idx.find({static_cast<std::size_t>(a0), static_cast<std::size_t>(b1)});
      auto r = idx.find({static_cast<std::size_t>(a1), static_cast<std::size_t>(b0)});
      if (l == idx.end() || r == idx.end()) continue;
      std::vector<PLocal> col(cells.size());
      col[l->second] += PLocal(1);
      col[r->second] -= PLocal(1);
      cols.push_back(col);
    }
    Matrix M(cells.size(), std::vector<PLocal>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cells.size(); ++i) M[i][j] = cols[j][i];
    out.add(d, cokernel_zp(M, cells.size(), p));
  }
  return out;
}

}  // namespace chowcob
