#include "chowcob/gralg/presentation.hpp"

#include <algorithm>

namespace chowcob {

using nlohmann::json;

int AlgebraPresentation::effective_truncation() const {
  if (truncation > 0) return truncation;
  long m = 0;
  for (auto& r : relations)
    if (!r.is_zero()) m = std::max(m, r.top_degree());
  if (m == 0) return 1 << 20;  // free algebra: nothing to truncate against
  return static_cast<int>(m);  // 2 * (top / 2)
}

Definitions AlgebraPresentation::definition_map() const {
  Definitions d;
  for (auto& [n, f] : definitions) d.insert_or_assign(n, f);
  return d;
}

Polynomial AlgebraPresentation::parse(const std::string& s) const {
  auto d = definition_map();
  return parse_poly(s, algebra, &d);
}

AlgebraPresentation presentation_from_json(const json& j) {
  unsigned p = j.at("prime").get<unsigned>();
  std::string mode = j.value("mode", "zp");
  if (mode != "fp" && mode != "zp") throw MathError("mode must be \"fp\" or \"zp\"");
  std::vector<GeneratorSpec> gens;
  for (auto& g : j.at("generators")) {
    GeneratorSpec s;
    s.name = g.at("name").get<std::string>();
    if (g.contains("top_deg"))
      s.top_degree = g.at("top_deg").get<int>();
    else if (g.contains("chow_deg"))
      s.top_degree = 2 * g.at("chow_deg").get<int>();
    else
      throw MathError("generator " + s.name + " needs chow_deg or top_deg");
    std::string par = g.value("parity", s.top_degree % 2 ? "odd" : "even");
    s.parity = par == "odd" ? Parity::odd : Parity::even;
    s.height = g.value("height", 0);
    gens.push_back(s);
  }
  AlgebraPresentation P;
  P.algebra = make_algebra(p, mode == "fp" ? CoeffMode::fp : CoeffMode::zp, gens);
  P.truncation = j.value("truncation", 0);
  P.partial = j.value("partial", false);
  Definitions defs;
  if (j.contains("definitions"))
    for (auto& d : j.at("definitions")) {
      std::string name = d.at("name").get<std::string>();
      if (P.algebra->index(name)) throw MathError("definition " + name + " shadows a generator");
      Polynomial f = parse_poly(d.at("expr").get<std::string>(), P.algebra, &defs);
      defs.insert_or_assign(name, f);
      P.definitions.emplace_back(name, f);
    }
  for (auto& r : j.at("relations")) {
    Polynomial f = parse_poly(r.get<std::string>(), P.algebra, &defs);
    if (!f.is_homogeneous()) throw MathError("relation " + r.get<std::string>() + " is not homogeneous");
    P.relations.push_back(f);
  }
  return P;
}

json presentation_to_json(const AlgebraPresentation& P) {
  json j;
  j["prime"] = P.p();
  j["mode"] = P.mode() == CoeffMode::fp ? "fp" : "zp";
  if (P.truncation) j["truncation"] = P.truncation;
  json gens = json::array();
  for (auto& g : P.algebra->gens()) {
    json e{{"name", g.name}, {"top_deg", g.top_degree}, {"parity", g.parity == Parity::odd ? "odd" : "even"}};
    if (g.height) e["height"] = g.height;
    gens.push_back(e);
  }
  j["generators"] = gens;
  json defs = json::array();
  for (auto& [n, f] : P.definitions) defs.push_back({{"name", n}, {"expr", f.str()}});
  if (!defs.empty()) j["definitions"] = defs;
  json rels = json::array();
  for (auto& r : P.relations) rels.push_back(r.str());
  j["relations"] = rels;
  return j;
}

AlgebraPresentation reduce_mod_p(const AlgebraPresentation& P) {
  AlgebraPresentation Q;
  Q.algebra = P.algebra->with_mode(CoeffMode::fp);
  Q.truncation = P.truncation;
  Q.partial = P.partial;
  for (auto& [n, f] : P.definitions) Q.definitions.emplace_back(n, f.recast(Q.algebra));
  for (auto& r : P.relations) {
    Polynomial f = r.recast(Q.algebra);
    if (!f.is_zero()) Q.relations.push_back(f);
  }
  return Q;
}

AlgebraPresentation kill_generators(const AlgebraPresentation& P, const std::vector<std::string>& kill) {
  std::vector<GeneratorSpec> keep;
  std::vector<bool> killed(P.algebra->size(), false);
  for (auto& k : kill) killed[P.algebra->require_index(k)] = true;
  for (std::size_t i = 0; i < killed.size(); ++i)
    if (!killed[i]) keep.push_back(P.algebra->gens()[i]);
  AlgebraPresentation Q;
  Q.algebra = make_algebra(P.p(), P.mode(), keep);
  Q.truncation = P.truncation;
  Q.partial = P.partial;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < killed.size(); ++i)
    images.push_back(killed[i] ? Polynomial(Q.algebra)
                               : Polynomial::generator(Q.algebra, P.algebra->gens()[i].name));
  for (auto& [n, f] : P.definitions) Q.definitions.emplace_back(n, f.evaluate(images, Q.algebra));
  for (auto& r : P.relations) {
    Polynomial f = r.evaluate(images, Q.algebra);
    if (!f.is_zero()) Q.relations.push_back(f);
  }
  return Q;
}

json graded_module_to_json(const GradedModule& M, const std::string& degree_key) {
  json arr = json::array();
  for (auto& [d, g] : M.groups()) {
    json tors = json::array();
    for (auto& [k, m] : g.torsion) tors.push_back({{"order", ipow(M.p(), k).get_ui()}, {"mult", m}});
    arr.push_back({{degree_key, d}, {"free_rank", g.free_rank}, {"torsion", tors}});
  }
  return arr;
}

}  // namespace chowcob
