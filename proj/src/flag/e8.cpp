#include "chowcob/flag/e8.hpp"

#include <json.hpp>
#include <array>
#include <map>
#include <optional>

#include "chowcob/gralg/parse.hpp"

namespace chowcob {

namespace detail {
const std::map<std::string, std::string>& embedded_data();
}

const BEntry& BTable::at(const std::string& name) const {
  for (auto& e : entries)
    if (e.name == name) return e;
  throw MathError("no b-entry " + name);
}

BTable e8_btable() {
  auto j = nlohmann::json::parse(detail::embedded_data().at("e8_p3_btable")).at("btable");
  std::vector<GeneratorSpec> gens;
  for (auto& g : j.at("generators")) gens.push_back({g.at("name").get<std::string>(), g.at("top_deg").get<int>(), Parity::even, 0});
  BTable t;
  t.algebra = make_algebra(j.at("prime").get<unsigned>(), CoeffMode::zp, gens);
  for (auto& e : j.at("entries"))
    t.entries.push_back({e.at("name").get<std::string>(), parse_poly(e.at("expr").get<std::string>(), t.algebra),
                         e.at("chow_deg").get<int>()});
  return t;
}

bool E8Report::ok() const {
  for (auto& d : degrees)
    if (!d.ok) return false;
  for (auto& r : rewrites)
    if (!r.ok) return false;
  return true;
}

Polynomial e8_rewrite(const std::string& rule, const Polynomial& f) {
  const AlgebraPtr& A = f.algebra();
  // work in A[t], t a formal parameter, and read off one t-coefficient
  std::vector<GeneratorSpec> gens = A->gens();
  gens.push_back({"t", 0, Parity::even, 0});
  auto B = make_algebra(A->p(), A->mode(), gens);
  std::vector<Polynomial> images;
  for (auto& g : A->gens()) images.push_back(Polynomial::generator(B, g.name));
  Polynomial t = Polynomial::generator(B, "t");
  auto set = [&](const std::string& g, const Polynomial& img) { images[A->require_index(g)] = img; };
  unsigned power = 1;
  if (rule == "r_D1") {
    set("v1", Polynomial::generator(B, "v1") + t.scaled(PLocal(3)));
  } else if (rule == "r_D2") {
    set("v2", Polynomial::generator(B, "v2") + t.scaled(PLocal(3)));
  } else if (rule == "r_3D1" || rule == "r_6D1") {
    set("y", Polynomial::generator(B, "y") + Polynomial::generator(B, "y'") * t);
    power = rule == "r_3D1" ? 1 : 2;
  } else {
    throw MathError("unknown rewrite rule " + rule);
  }
  Polynomial g = f.evaluate(images, B);
  const std::size_t ti = B->require_index("t");
  Polynomial out(A);
  for (auto& [e, c] : g.terms())
    if (e[ti] == power) {
      Exps k(e.begin(), e.begin() + static_cast<long>(A->size()));
      out.add_term(k, c);
    }
  return out;
}

namespace {

// image = u * target for a p-local unit u, if possible
std::optional<PLocal> unit_ratio(const Polynomial& image, const Polynomial& target, unsigned p) {
  if (image.is_zero() || target.is_zero() || image.size() != target.size()) return std::nullopt;
  auto [e0, c0] = *target.terms().begin();
  PLocal u = image.coeff(e0).div_exact(c0, p);
  if (!u.is_unit(p)) return std::nullopt;
  if (image != target.scaled(u)) return std::nullopt;
  return u;
}

}  // namespace

E8Report e8_consistency(const BTable& t) {
  E8Report r;
  for (auto& e : t.entries) {
    DegreeRow row{e.name, e.chow_deg, 0, e.expr.is_homogeneous() && !e.expr.is_zero(), false};
    if (row.homogeneous) row.actual = e.expr.chow_degree();
    row.ok = row.homogeneous && row.actual == e.chow_deg;
    r.degrees.push_back(row);
  }
  const std::vector<std::array<const char*, 3>> rules = {
      {"r_D1", "b4", "b8"},   {"r_D2", "b4", "b20"},  {"r_3D1", "b16", "b28"}, {"r_D1", "b16", "b20"},
      {"r_6D1", "b16", "b40"}, {"r_D1", "b36", "b40"}, {"r_3D1", "b36", "b48"}};
  const unsigned p = t.algebra->p();
  for (auto& [rule, src, dst] : rules) {
    Polynomial img = e8_rewrite(rule, t.at(src).expr);
    auto u = unit_ratio(img, t.at(dst).expr, p);
    r.rewrites.push_back({rule, src, dst, img.str(), u ? u->str() : "-", u.has_value()});
  }
  return r;
}

E8Report e8_consistency() { return e8_consistency(e8_btable()); }

}  // namespace chowcob
