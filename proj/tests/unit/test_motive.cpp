#include <doctest.h>

#include "chowcob/motive/degv.hpp"
#include "chowcob/motive/modules.hpp"

using namespace chowcob;

namespace {

GradedModule mn_oracle(int n, unsigned p, int deg) {
  GradedModule g(p);
  if (n < 0) return g;
  g.add_free(deg);
  for (int i = 1; i < n; ++i) g.add_torsion(deg - static_cast<int>(ipow_ll(p, i) - 1), 1);
  return g;
}

DegvTable one(unsigned p, std::vector<std::string> facts, std::optional<int> dim = std::nullopt) {
  DegvTable t;
  t.p = p;
  t.dim = dim;
  t.gens.push_back(DegvGenerator::make("y", static_cast<int>(p + 1), std::move(facts)));
  return t;
}

}  // namespace

TEST_CASE("M_n shape") {
  for (unsigned p : {2u, 3u, 5u})
    for (int n = 0; n <= 4; ++n) {
      int deg = static_cast<int>(ipow_ll(p, n));
      auto M = mn_module(n, p, deg);
      CHECK(M.module == mn_oracle(n, p, deg));
      if (n >= 1) {
        CHECK(M.module.free_total() == 1);
        CHECK(M.module.torsion_total() == n - 1);
      }
    }
}

TEST_CASE("ideal quotient reproduces M_n") {
  for (unsigned p : {2u, 3u})
    for (int n = 1; n <= 3; ++n) {
      auto I = invariant_ideal(n, p, n);
      CHECK(ideal_pattern_module(I, 20) == mn_oracle(n, p, 20));
    }
}

TEST_CASE("ideals (p, v1^2) and (p^2, p v1, v1^2)") {
  auto a = ideal_pattern_module(ideal_p_v1sq(2), 10);
  auto b = ideal_pattern_module(ideal_p2_pv1_v1sq(2), 10);
  CHECK(a.free_total() == 1);
  CHECK(b.free_total() == 1);
  CHECK(a.torsion_total() >= 1);
  CHECK(b.torsion_total() >= a.torsion_total());
}

TEST_CASE("Rost motive Chow groups") {
  // p=2, n=2: |y| = 3, Z + M_2(y)
  GradedModule r22(2);
  r22.add_free(0);
  r22.add_free(3);
  r22.add_torsion(2, 1);
  CHECK(rost_chow(2, 2) == r22);
  // p=3, n=2: |y| = 4, Z + M_2(y) + M_2(y^2)
  GradedModule r23(3);
  r23.add_free(0);
  r23.add_free(4);
  r23.add_torsion(2, 1);
  r23.add_free(8);
  r23.add_torsion(6, 1);
  CHECK(rost_chow(2, 3) == r23);
  CHECK(rost_b(3, 2) == 7);
  CHECK(rost_b(2, 5) == 6);
}

TEST_CASE("Rost restriction presentation") {
  auto M = rost_res_omega(2, 2);
  CHECK(M.gens.size() == 3);
  CHECK(M.rels.size() == 1);
  auto M3 = rost_res_omega(3, 2);
  CHECK(M3.gens.size() == 4);
  CHECK(M3.rels.size() == 3);
  auto M1 = rost_res_omega(1, 2);
  CHECK(M1.gens.size() == 2);
  CHECK(M1.rels.empty());
  for (auto& r : M3.rels) CHECK_NOTHROW(M3.relation_degree(r));
}

TEST_CASE("Morava localization has rank p") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
    auto g = morava_localize(rost_res_omega(n, 2), m);
    CHECK(g.free_total() == 2);
    CHECK(g.torsion_total() == 0);
  }
  auto g = morava_localize(rost_res_omega(2, 3), 1);
  CHECK(g.free_total() == 3);
  CHECK(morava_localize(BPModulePresentation{}, 0).free_total() == 0);
  CHECK_THROWS(morava_localize(rost_res_omega(2, 2), 5));
}

TEST_CASE("degv: definition cases") {
  auto t = degv_infer(one(2, {"y in Res"}));
  CHECK(t.gens[0].resolved());
  CHECK(t.gens[0].lo == 0);
  // v1 y in Res, y not, dim p^2 - 1
  for (unsigned p : {2u, 3u}) {
    auto r = degv_infer(one(p, {"v1*y in Res", "y notin Res"}), static_cast<int>(p * p - 1), false);
    CHECK(r.gens[0].resolved());
    CHECK(r.gens[0].lo == 2);
  }
  auto open = degv_infer(one(2, {"y notin Res"}));
  CHECK_FALSE(open.gens[0].resolved());
  CHECK(open.gens[0].lo == -1);
  CHECK(open.gens[0].hi == 2);  // |y| = 3 <= 2^2 - 1
}

TEST_CASE("degv: seeded contradictions") {
  CHECK_THROWS_AS(degv_infer(one(2, {"v2*y in Res", "deg_v = 1"})), InconsistentFacts);
  CHECK_THROWS_AS(degv_infer(one(2, {"y in Res", "y notin Res"})), InconsistentFacts);
  CHECK_THROWS_AS(degv_infer(one(2, {"v1*y in Res", "y notin Res"}), 1, false), InconsistentFacts);
  CHECK_THROWS_AS(degv_infer(one(3, {"v1*y in Res", "y notin Res", "deg_v <= 1"})), InconsistentFacts);
}

TEST_CASE("degv: split index and idempotence") {
  auto t = degv_infer(one(2, {"y notin Res"}), 1, true);
  CHECK(t.gens[0].resolved());
  CHECK(t.gens[0].lo == 1);
  auto again = degv_infer(t);
  CHECK(again.gens[0].lo == t.gens[0].lo);
  CHECK(again.gens[0].hi == t.gens[0].hi);
}

TEST_CASE("degv: related generators propagate") {
  DegvTable t;
  t.p = 2;
  t.gens.push_back(DegvGenerator::make("a", 3, {"deg_v = 2"}));
  t.gens.push_back(DegvGenerator::make("b", 4, {"b notin Res"}));
  t.related.push_back({"a", "b"});
  t.max_degv = 2;
  auto r = degv_infer(t);
  CHECK(r.gens[1].resolved());
  CHECK(r.gens[1].lo == 2);
  t.gens[1].facts = {"deg_v = 1"};
  CHECK_THROWS_AS(degv_infer(t), InconsistentFacts);
}

TEST_CASE("qx_module") {
  DegvTable t;
  t.p = 2;
  for (int i = 0; i < 3; ++i) t.gens.push_back(DegvGenerator::make("g" + std::to_string(i), i, {"deg_v = 0"}));
  auto r = degv_infer(t);
  GradedModule free(2);
  for (int i = 0; i < 3; ++i) free.add_free(i);
  CHECK(qx_module(r) == free);
  CHECK_THROWS(qx_module(degv_infer(one(2, {"y notin Res"}))));
  // Rost set {y^i} with d = n
  DegvTable rost;
  rost.p = 3;
  rost.gens.push_back(DegvGenerator::make("1", 0, {"deg_v = 0"}));
  rost.gens.push_back(DegvGenerator::make("y", 4, {"deg_v = 2"}));
  rost.gens.push_back(DegvGenerator::make("y2", 8, {"deg_v = 2"}));
  CHECK(qx_module(degv_infer(rost)) == rost_chow(2, 3));
}

TEST_CASE("degv json round trip") {
  DegvTable t = one(2, {"v1*y in Res", "y notin Res"}, 3);
  auto u = degv_from_json(degv_to_json(t));
  CHECK(u.gens.size() == 1);
  CHECK(u.gens[0].facts == t.gens[0].facts);
  CHECK(u.dim == t.dim);
}

TEST_CASE("type (I) products with markers") {
  auto A = marked_mn(2, 2, 3, "s");
  auto B = marked_mn(2, 2, 3, "t");
  auto plain = marked_to_graded(A, 2).tensor(marked_to_graded(B, 2));
  auto prod = product_type_I(A, B, 2);
  CHECK(prod.free_total() == plain.free_total());
  CHECK(prod.at(5).torsion_count() == plain.at(5).torsion_count() - 1);
  MarkedModule unit{{"u", "", 0, 0}};
  CHECK(product_type_I(A, unit, 2) == marked_to_graded(A, 2));
  MarkedModule bad{{"s", "c1", 2, 1}};
  CHECK_THROWS(product_type_I(bad, B, 2));
}
