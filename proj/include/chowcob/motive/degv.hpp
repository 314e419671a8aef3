#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chowcob/gralg/graded_module.hpp"

namespace chowcob {

struct InconsistentFacts : MathError {
  using MathError::MathError;
};

struct DegvGenerator {
  std::string name;
  int chow_deg = 0;
  std::vector<std::string> facts;
  bool nonfree = false;
  // filled by degv_infer
  int lo = -1;
  std::optional<int> hi;  // nullopt = unbounded
  std::string pattern;    // "", "M'" for (p, v1^2), "M''" for (p^2, p v1, v1^2)
  std::vector<std::string> derived;  // closed membership facts
  std::vector<int> tor_v_c;          // tor_v(c_i) = i when res is injective
  std::optional<int> tor_v_bound;
  bool resolved() const { return hi && *hi == lo; }
  static DegvGenerator make(std::string name, int chow_deg, std::vector<std::string> facts = {}) {
    DegvGenerator g;
    g.name = std::move(name);
    g.chow_deg = chow_deg;
    g.facts = std::move(facts);
    return g;
  }
};

struct DegvTable {
  unsigned p = 2;
  std::vector<DegvGenerator> gens;
  std::optional<int> dim;
  bool split_index_p = false;
  std::optional<int> max_degv;  // known bound deg_v(X) <= n
  std::vector<std::pair<std::string, std::string>> related;  // deg_v(first) <= deg_v(second)
  bool injective_res = false;
};

// Fact syntax, one per string, <g> being the generator's own name or "y":
//   "[c*]<g> in Res" / "[c*]<g> notin Res"   c in {p, v0, v<j>, p^2, p*v1, v1^2} (Res, Res_Omega, Res_CH)
//   "deg_v = k", "deg_v <= k", "tor_v = k", "nonfree"
DegvTable degv_infer(const DegvTable& table);
DegvTable degv_infer(const DegvTable& table, std::optional<int> dim, bool split_index_p);

// Q(X) as the sum of M_{d_i}(y_i) (or the (p, v1^2), (p^2, p v1, v1^2) modules for patterned generators)
GradedModule qx_module(const DegvTable& resolved);

DegvTable degv_from_json(const nlohmann::json& j);
nlohmann::json degv_to_json(const DegvTable& t);

}  // namespace chowcob
