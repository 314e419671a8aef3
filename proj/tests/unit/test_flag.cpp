#include <doctest.h>

#include <algorithm>

#include "chowcob/flag/catalogue.hpp"
#include "chowcob/flag/constructors.hpp"
#include "chowcob/flag/e8.hpp"
#include "chowcob/flag/quadric.hpp"
#include "chowcob/gralg/groebner.hpp"
#include "chowcob/motive/modules.hpp"

using namespace chowcob;

namespace {

// Z[h]/(h^a) + sum Z/2[h]/(h^b_j){u_j}
GradedModule quadric_oracle(int a, const std::vector<std::pair<int, int>>& tors) {
  GradedModule g(2);
  for (int i = 0; i < a; ++i) g.add_free(i);
  for (auto [deg, len] : tors)
    for (int i = 0; i < len; ++i) g.add_torsion(deg + i, 1);
  return g;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("catalogue loads every key") {
  auto keys = catalogue_keys();
  CHECK(keys.size() >= 7);
  for (auto& k : keys) {
    if (k.find('(') != std::string::npos) continue;
    auto e = catalogue(k);
    CHECK(e.key == k);
    CHECK_FALSE(e.presentation.relations.empty());
    CHECK(e.metadata.contains("group"));
  }
  CHECK_THROWS(catalogue("no_such_group"));
  auto e = catalogue_from_json(catalogue_to_json(catalogue("g2_twisted")));
  CHECK(graded_groups(e.presentation, 0, 6) == graded_groups(catalogue("g2_twisted").presentation, 0, 6));
}

TEST_CASE("G2 twisted") {
  auto M = graded_groups(catalogue("g2_twisted").presentation, 0, 8);
  std::vector<long> fr{1, 2, 2, 2, 2, 2, 1};
  for (int d = 0; d <= 6; ++d) CHECK(M.at(d).free_rank == fr[d]);
  std::vector<long> tor{0, 0, 1, 2, 2, 1, 0};
  for (int d = 0; d <= 6; ++d) CHECK(M.at(d).torsion_count() == tor[d]);
  CHECK(M.free_total() == 12);
  CHECK(M.torsion_total() == 6);
}

TEST_CASE("split flag varieties have |W| classes") {
  auto g2 = catalogue("g2_gt_split").presentation;
  CHECK(graded_groups(g2, 0, 12).free_total() == 12);
  CHECK(graded_groups(g2, 0, 12).torsion_total() == 0);
  for (int l : {2, 3}) {
    auto e = so_odd_gt(l);
    auto M = graded_groups(e.presentation, 0, l * l + 2);
    CHECK(M.free_total() == (1L << l) * factorial(l));
    CHECK(M.torsion_total() == 0);
  }
  auto gp = graded_groups(so_odd_gp(3).presentation, 0, 8);
  CHECK(gp.free_total() == 6);
  CHECK(gp.torsion_total() == 0);
  CHECK(catalogue("so_odd_gp(3)").key == catalogue("so_odd_gp_3").key);
}

TEST_CASE("Grothendieck quotients") {
  auto g = graded_groups(grothendieck_quotient(catalogue("g2_gt_split")), 0, 8);
  GradedModule want(2);
  want.add_free(0);
  want.add_torsion(3, 1);
  CHECK(g == want);
  auto tw = grothendieck_quotient(catalogue("g2_twisted"));
  CHECK(graded_groups(tw, 0, 8).free_total() == 1);
  CHECK(graded_groups(reduce_mod_p(tw), 0, 8).mod_p_total() == 1);
}

TEST_CASE("F4 bbar is a regular sequence of total 384") {
  auto P = catalogue("f4_bbar").presentation;
  auto r = regular_sequence_check(P.algebra, P.relations, 20);
  CHECK(r.regular);
  CHECK(hilbert_series(P, 24).total() == 384);
}

TEST_CASE("type (I) twisted G2 agrees with the catalogue") {
  auto st = catalogue("g2_st_bar");
  auto& bb = st.metadata.at("bbar");
  std::vector<Polynomial> bbars;
  for (auto& s : bb) bbars.push_back(st.presentation.parse(s.get<std::string>()));
  auto tw = type_I_twisted(st.presentation.algebra, bbars);
  auto cat = reduce_mod_p(catalogue("g2_twisted").presentation);
  auto a = fp_dims(tw.presentation, 8), b = fp_dims(cat, 8);
  CHECK(compare_dims(a, b, 0, 8).ok);
  CHECK(compare_dims(tw.comparison, a, 0, 8).ok);
}

TEST_CASE("additive checks flag mismatches") {
  DimSeries a{{0, 1}, {1, 2}}, b{{0, 1}, {1, 3}};
  auto r = compare_dims(a, b, 0, 2);
  CHECK_FALSE(r.ok);
  CHECK(r.first_mismatch == 1);
  auto core = rost_chow(2, 2);
  GradedModule one(2);
  one.add_free(0);
  CHECK(psz_additive_check(core, one, core).ok);
}

TEST_CASE("Pfister max neighbor n=2") {
  auto R = quadric_qx(QuadricSpec::pfister_max(2));
  auto want = quadric_oracle(6, {{2, 3}});
  CHECK(R.closed_form == want);
  CHECK(R.from_groups == want);
  CHECK(R.from_degv == want);
  CHECK(R.J == std::vector<int>{0, 1, 2});
  CHECK(R.partition);
  CHECK(R.u_degree.at(1) == 2);
}

TEST_CASE("Pfister max neighbor n=3") {
  auto R = quadric_qx(QuadricSpec::pfister_max(3));
  CHECK(R.spec.l == 7);
  CHECK(R.closed_form.free_total() == 14);
  CHECK(R.closed_form.torsion_total() == 14);
  CHECK(R.from_groups == R.closed_form);
  CHECK(R.from_degv == R.closed_form);
  CHECK(R.partition);
}

TEST_CASE("Pfister min neighbor n=3") {
  auto R = quadric_qx(QuadricSpec::pfister_min(3));
  CHECK(R.spec.l == 4);
  CHECK(R.closed_form.free_total() == 8);
  CHECK(R.closed_form.torsion_total() == 5);
  CHECK(R.from_groups == R.closed_form);
  CHECK(R.from_degv == R.closed_form);
  auto J = R.J;
  std::sort(J.begin(), J.end());
  CHECK(J == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("split quadric is torsion free") {
  for (int l : {1, 2, 3, 4}) {
    auto R = quadric_qx(QuadricSpec::split(l));
    CHECK(R.closed_form.torsion_total() == 0);
    CHECK(R.closed_form.free_total() == 2 * l);
    CHECK(R.from_groups == R.closed_form);
  }
}

TEST_CASE("quadric spec d values") {
  auto s = QuadricSpec::pfister_min(3);
  auto d = s.d();
  CHECK(d == std::vector<int>{2, 2, 2, 3});
  auto back = QuadricSpec::from_d(4, d);
  CHECK(back.f == s.f);
}

TEST_CASE("embedding bounds") {
  std::map<int, int> f0{{1, 0}, {2, 0}};
  CHECK(quadric_embedding_bounds(f0, f0, 0).ok);
  std::map<int, int> f1{{1, 1}, {2, 0}};
  CHECK(quadric_embedding_bounds(f1, f0, 1).ok);
  std::map<int, int> bad{{1, 0}, {2, 2}};
  auto r = quadric_embedding_bounds(bad, f0, 1);
  CHECK_FALSE(r.ok);
  CHECK(r.failing == std::vector<int>{2});
}

TEST_CASE("Vishik membership") {
  CHECK(vishik_membership({1, 3}, {1, 3}, 5));
  CHECK_FALSE(vishik_membership({1}, {3}, 5));
  CHECK(vishik_membership({}, {}, 5));
  CHECK_THROWS(vishik_membership({1}, {9}, 5));
}

TEST_CASE("z products") {
  auto a = z_product({1}, 2, 5);
  CHECK(a.terms == std::vector<std::set<int>>{{1, 2}, {3}});
  auto b = z_product({}, 3, 5);
  CHECK(b.terms == std::vector<std::set<int>>{{3}});
  auto c = z_product({2}, 2, 5);
  CHECK(c.terms == std::vector<std::set<int>>{{4}});
  CHECK_FALSE(c.dropped.empty());
  CHECK(z_product({3}, 3, 5).terms.empty());
}

TEST_CASE("E8 table") {
  auto t = e8_btable();
  CHECK(t.entries.size() == 8);
  auto rep = e8_consistency(t);
  CHECK(rep.ok());
  std::vector<int> want{2, 4, 8, 10, 14, 18, 20, 24};
  for (std::size_t i = 0; i < rep.degrees.size(); ++i) CHECK(rep.degrees[i].actual == want[i]);
  auto b4 = t.at("b4").expr;
  CHECK(e8_rewrite("r_D1", b4) == t.at("b8").expr);
  CHECK_THROWS(e8_rewrite("r_bogus", b4));
  CHECK_THROWS(t.at("b99"));
}
