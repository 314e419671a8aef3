#include "chowcob/flag/catalogue.hpp"

#include <map>
#include <regex>

namespace chowcob {

namespace detail {
const std::map<std::string, std::string>& embedded_data();
}

using nlohmann::json;

std::vector<std::string> CatalogueEntry::torus() const {
  if (!metadata.contains("torus")) return {};
  return metadata.at("torus").get<std::vector<std::string>>();
}

CatalogueEntry catalogue_from_json(const json& j) {
  CatalogueEntry e;
  e.key = j.at("key").get<std::string>();
  e.metadata = j.value("metadata", json::object());
  e.presentation = presentation_from_json(j.at("presentation"));
  return e;
}

json catalogue_to_json(const CatalogueEntry& e) {
  return {{"key", e.key}, {"metadata", e.metadata}, {"presentation", presentation_to_json(e.presentation)}};
}

std::vector<std::string> catalogue_keys() {
  std::vector<std::string> out;
  for (auto& [k, v] : detail::embedded_data())
    if (json::parse(v).contains("presentation")) out.push_back(k);
  out.push_back("so_odd_gp(l)");
  out.push_back("so_odd_gt(l)");
  return out;
}

CatalogueEntry catalogue(const std::string& key) {
  static const std::regex fam(R"((so_odd_gp|so_odd_gt)(?:\((\d+)\)|_(\d+)))");
  std::smatch m;
  if (std::regex_match(key, m, fam)) {
    int l = std::stoi(m[2].matched ? m[2].str() : m[3].str());
    return m[1] == "so_odd_gp" ? so_odd_gp(l) : so_odd_gt(l);
  }
  auto& data = detail::embedded_data();
  auto it = data.find(key);
  if (it == data.end()) throw MathError("unknown catalogue key '" + key + "'");
  json j = json::parse(it->second);
  if (!j.contains("presentation")) throw MathError("'" + key + "' is not a presentation entry");
  return catalogue_from_json(j);
}

CatalogueEntry so_odd_gp(int l) {
  if (l < 1) throw MathError("so_odd_gp needs l >= 1");
  CatalogueEntry e;
  e.key = "so_odd_gp(" + std::to_string(l) + ")";
  auto A = make_algebra(2, CoeffMode::zp, {{"t", 2, Parity::even, 0}, {"y", 2 * l, Parity::even, 0}});
  Polynomial t = Polynomial::generator(A, "t"), y = Polynomial::generator(A, "y");
  e.presentation.algebra = A;
  e.presentation.relations = {t.pow(static_cast<unsigned>(l)) - y.scaled(PLocal(2)), y * y};
  e.metadata = {{"group", "SO(" + std::to_string(2 * l + 1) + ")"},
                {"p", 2},
                {"torsion_index_p", 2},
                {"split", true},
                {"torus", {"t"}},
                {"source", "Toda-Watanabe, H*(SO(2l+1)/(SO(2l-1)xSO(2))) = Z[t,y]/(t^l-2y, y^2)"}};
  return e;
}

CatalogueEntry so_odd_gt(int l) {
  if (l < 1) throw MathError("so_odd_gt needs l >= 1");
  std::vector<GeneratorSpec> gens;
  std::vector<std::string> torus;
  for (int i = 1; i < l; ++i) {
    gens.push_back({"t" + std::to_string(i), 2, Parity::even, 0});
    torus.push_back("t" + std::to_string(i));
  }
  gens.push_back({"t", 2, Parity::even, 0});
  torus.push_back("t");
  for (int i = 1; i < l; ++i) gens.push_back({"y" + std::to_string(2 * i), 2 * i, Parity::even, 0});
  gens.push_back({"y", 2 * l, Parity::even, 0});
  auto A = make_algebra(2, CoeffMode::zp, gens);
  auto gen = [&](const std::string& n) { return Polynomial::generator(A, n); };
  auto y2 = [&](int k) {  // y_{2k}, zero outside 1..l-1
    if (k == 0) return Polynomial::constant(A, PLocal(1));
    if (k < 0 || k >= l) return Polynomial(A);
    return gen("y" + std::to_string(2 * k));
  };
  // elementary symmetric functions of t_1..t_{l-1}
  std::vector<Polynomial> c(static_cast<std::size_t>(l), Polynomial(A));
  c[0] = Polynomial::constant(A, PLocal(1));
  for (int i = 1; i < l; ++i) {
    Polynomial ti = gen("t" + std::to_string(i));
    for (int k = i; k >= 1; --k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - 1)] * ti;
  }
  AlgebraPresentation P;
  P.algebra = A;
  for (int i = 1; i < l; ++i) P.relations.push_back(c[static_cast<std::size_t>(i)] - y2(i).scaled(PLocal(2)));
  for (int i = 1; i < l; ++i) {
    // (1/4) sum_j (-1)^j c_j c_{2i-j} with c_j = 2 y_{2j}
    Polynomial J = y2(2 * i);
    for (int j = 1; j < 2 * i; ++j) J += (y2(j) * y2(2 * i - j)).scaled(PLocal(j % 2 ? -1 : 1));
    if (!J.is_zero()) P.relations.push_back(J);
  }
  P.relations.push_back(gen("t").pow(static_cast<unsigned>(l)) - gen("y").scaled(PLocal(2)));
  P.relations.push_back(gen("y") * gen("y"));
  CatalogueEntry e;
  e.key = "so_odd_gt(" + std::to_string(l) + ")";
  e.presentation = P;
  e.metadata = {{"group", "SO(" + std::to_string(2 * l + 1) + ")"},
                {"p", 2},
                {"torsion_index_p", 2},
                {"split", true},
                {"torus", torus},
                {"source",
                 "Toda-Watanabe, H*(SO(2l+1)/T) = H*(G/P) (x) Z[t_i,y_2i]/(c'_i - 2y_2i, J_2i), c'_i = sigma_i(t_1..t_{l-1})"}};
  return e;
}

AlgebraPresentation grothendieck_quotient(const CatalogueEntry& e) {
  auto t = e.torus();
  if (t.empty()) throw MathError("catalogue entry " + e.key + " has no torus generators");
  return kill_generators(e.presentation, t);
}

}  // namespace chowcob
