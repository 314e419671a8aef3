#include "chowcob/steenrod/table.hpp"

#include "chowcob/gralg/parse.hpp"

namespace chowcob {

OperationTable::OperationTable(std::string name, AlgebraPtr A, int i_max)
    : name_(std::move(name)), A_(std::move(A)), i_max_(i_max) {
  if (A_->mode() != CoeffMode::fp) throw MathError("operation tables live over F_p");
  if (i_max < 0) throw MathError("i_max must be nonnegative");
  Q_.assign(static_cast<std::size_t>(i_max + 1), std::vector<std::optional<Polynomial>>(A_->size()));
  P_.assign(A_->size(), std::nullopt);
}

void OperationTable::set_Q(int i, const std::string& gen, const Polynomial& img) {
  if (i < 0 || i > i_max_) throw MathError("Q_" + std::to_string(i) + " beyond table range");
  Q_[static_cast<std::size_t>(i)][A_->require_index(gen)] = img.recast(A_);
}

void OperationTable::set_power(const std::string& gen, std::vector<Polynomial> total) {
  for (auto& f : total) f = f.recast(A_);
  P_[A_->require_index(gen)] = std::move(total);
}

bool OperationTable::has_Q(int i, std::size_t gen) const {
  return i >= 0 && i <= i_max_ && Q_[static_cast<std::size_t>(i)][gen].has_value();
}

bool OperationTable::has_power(std::size_t gen) const { return P_[gen].has_value(); }

const Polynomial& OperationTable::Q_image(int i, std::size_t gen) const {
  if (i < 0 || i > i_max_) throw MathError("Q_" + std::to_string(i) + " beyond table range (i_max=" +
                                           std::to_string(i_max_) + ")");
  auto& q = Q_[static_cast<std::size_t>(i)][gen];
  if (!q) throw MathError("generator " + A_->gens()[gen].name + " missing from Q_" + std::to_string(i) + " table");
  return *q;
}

const std::vector<Polynomial>& OperationTable::power_images(std::size_t gen) const {
  auto& q = P_[gen];
  if (!q) throw MathError("generator " + A_->gens()[gen].name + " missing from power table");
  return *q;
}

void OperationTable::validate() const {
  const long p = A_->p();
  for (std::size_t g = 0; g < A_->size(); ++g) {
    const auto& gs = A_->gens()[g];
    for (int i = 0; i <= i_max_; ++i) {
      auto& q = Q_[static_cast<std::size_t>(i)][g];
      if (!q || q->is_zero()) continue;
      long want = gs.top_degree + 2 * ipow_ll(p, static_cast<unsigned>(i)) - 1;
      if (q->top_degree() != want)
        throw MathError("Q_" + std::to_string(i) + "(" + gs.name + ") has degree " + std::to_string(q->top_degree()) +
                        ", expected " + std::to_string(want));
    }
    if (!P_[g]) continue;
    auto& pt = *P_[g];
    if (pt.empty() || pt[0] != Polynomial::generator(A_, g))
      throw MathError("P^0(" + gs.name + ") must be " + gs.name);
    for (std::size_t k = 1; k < pt.size(); ++k) {
      if (pt[k].is_zero()) continue;
      long want = gs.top_degree + 2 * static_cast<long>(k) * (p - 1);
      if (pt[k].top_degree() != want)
        throw MathError("P^" + std::to_string(k) + "(" + gs.name + ") has degree " +
                        std::to_string(pt[k].top_degree()) + ", expected " + std::to_string(want));
    }
  }
}

Polynomial OperationTable::parse(const std::string& s) const { return parse_poly(s, A_); }

Polynomial apply_Q(int i, const Polynomial& f, const OperationTable& T) {
  const AlgebraPtr& A = T.algebra();
  Polynomial out(A);
  for (auto& [e, c] : f.terms()) {
    for (std::size_t g = 0; g < e.size(); ++g) {
      if (!e[g]) continue;
      const Polynomial& qg = T.Q_image(i, g);
      if (qg.is_zero()) continue;
      Exps left(e.size(), 0), rest = e;
      for (std::size_t h = 0; h < g; ++h) left[h] = e[h], rest[h] = 0;
      rest[g] = static_cast<std::uint16_t>(e[g] - 1);
      // Koszul sign of moving Q past the left factor
      long ldeg = A->top_degree(left);
      PLocal coef = c * PLocal(static_cast<long>(e[g]));
      if (ldeg % 2) coef = -coef;
      out += Polynomial::monomial(A, left, coef) * qg * Polynomial::monomial(A, rest);
    }
  }
  return out;
}

namespace {

using Series = std::vector<Polynomial>;

Series series_mul(const Series& a, const Series& b, std::size_t len, const AlgebraPtr& A) {
  Series r(len, Polynomial(A));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

Polynomial apply_power(int k, const Polynomial& f, const OperationTable& T) {
  if (k < 0) throw MathError("negative power index");
  const AlgebraPtr& A = T.algebra();
  const std::size_t len = static_cast<std::size_t>(k) + 1;
  Polynomial out(A);
  for (auto& [e, c] : f.terms()) {
    Series acc(1, Polynomial::constant(A, c));
    for (std::size_t g = 0; g < e.size(); ++g)
      for (unsigned r = 0; r < e[g]; ++r) acc = series_mul(acc, T.power_images(g), len, A);
    if (acc.size() > static_cast<std::size_t>(k)) out += acc[static_cast<std::size_t>(k)];
  }
  return out;
}

Polynomial milnor_composite(int hat, int n, const Polynomial& f, const OperationTable& T) {
  if (n < 0 || hat < 0 || hat > n) throw MathError("milnor_composite: need 0 <= hat <= n");
  Polynomial g = f;
  for (int i = n; i >= 0; --i) {
    if (i == hat) continue;
    if (i > T.i_max()) throw MathError("Q_" + std::to_string(i) + " beyond table range");
    g = apply_Q(i, g, T);
  }
  return g;
}

OperationTable table_from_json(const nlohmann::json& j) {
  unsigned p = j.at("p").get<unsigned>();
  std::vector<GeneratorSpec> gens;
  for (auto& g : j.at("generators")) {
    GeneratorSpec s;
    s.name = g.at("name").get<std::string>();
    s.top_degree = g.contains("top_deg") ? g.at("top_deg").get<int>() : 2 * g.at("chow_deg").get<int>();
    s.parity = s.top_degree % 2 ? Parity::odd : Parity::even;
    s.height = g.value("height", 0);
    gens.push_back(s);
  }
  auto A = make_algebra(p, CoeffMode::fp, gens);
  int i_max = -1;
  for (auto& [k, v] : j.at("Q").items()) i_max = std::max(i_max, std::stoi(k));
  OperationTable T(j.value("name", std::string("custom")), A, std::max(i_max, 0));
  for (auto& [k, v] : j.at("Q").items())
    for (auto& [g, e] : v.items()) T.set_Q(std::stoi(k), g, parse_poly(e.get<std::string>(), A));
  if (j.contains("P_total"))
    for (auto& [g, lst] : j.at("P_total").items()) {
      std::vector<Polynomial> ps;
      for (auto& e : lst) ps.push_back(parse_poly(e.get<std::string>(), A));
      T.set_power(g, ps);
    }
  T.validate();
  return T;
}

nlohmann::json table_to_json(const OperationTable& T) {
  nlohmann::json j;
  const auto& A = *T.algebra();
  j["name"] = T.name();
  j["p"] = T.p();
  nlohmann::json gens = nlohmann::json::array();
  for (auto& g : A.gens()) {
    nlohmann::json e{{"name", g.name}, {"top_deg", g.top_degree}};
    if (g.height) e["height"] = g.height;
    gens.push_back(e);
  }
  j["generators"] = gens;
  nlohmann::json q = nlohmann::json::object();
  for (int i = 0; i <= T.i_max(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t g = 0; g < A.size(); ++g)
      if (T.has_Q(i, g)) row[A.gens()[g].name] = T.Q_image(i, g).str();
    q[std::to_string(i)] = row;
  }
  j["Q"] = q;
  nlohmann::json pt = nlohmann::json::object();
  for (std::size_t g = 0; g < A.size(); ++g) {
    if (!T.has_power(g)) continue;
    nlohmann::json lst = nlohmann::json::array();
    for (auto& f : T.power_images(g)) lst.push_back(f.str());
    pt[A.gens()[g].name] = lst;
  }
  j["P_total"] = pt;
  return j;
}

}  // namespace chowcob
