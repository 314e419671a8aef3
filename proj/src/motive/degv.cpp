#include "chowcob/motive/degv.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chowcob/motive/modules.hpp"

namespace chowcob {

namespace {

constexpr int K = 24;  // largest v-index tracked

enum Kind { kA = 0, kPP, kPV, kVV, kB0 };  // kB0 + j is v_j * y

struct Lit {
  std::size_t g;
  int kind;
  bool operator<(const Lit& o) const { return std::tie(g, kind) < std::tie(o.g, o.kind); }
  bool operator==(const Lit& o) const { return g == o.g && kind == o.kind; }
};

struct Impl {
  Lit from, to;
  std::string rule;
};

struct Val {
  bool v;
  std::string why;
};

std::string coef_name(int kind) {
  switch (kind) {
    case kA: return "";
    case kPP: return "p^2*";
    case kPV: return "p*v1*";
    case kVV: return "v1^2*";
    default: return kind == kB0 ? "p*" : "v" + std::to_string(kind - kB0) + "*";
  }
}

std::string lit_str(const DegvTable& t, Lit l) { return coef_name(l.kind) + t.gens[l.g].name + " in Res"; }

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int coef_kind(std::string c, unsigned p) {
  c.erase(std::remove(c.begin(), c.end(), ' '), c.end());
  const std::string ps = std::to_string(p), pp = std::to_string(p * p);
  if (c.empty()) return kA;
  if (c == "p" || c == "v0" || c == ps) return kB0;
  if (c == "p^2" || c == pp || c == ps + "^2") return kPP;
  if (c == "p*v1" || c == "v1*p" || c == ps + "*v1" || c == "v1*" + ps || c == ps + "v1") return kPV;
  if (c == "v1^2") return kVV;
  if (c.size() > 1 && c[0] == 'v' && std::all_of(c.begin() + 1, c.end(), ::isdigit)) {
    int j = std::stoi(c.substr(1));
    if (j > K) throw MathError("v-index " + std::to_string(j) + " beyond engine range");
    return kB0 + j;
  }
  throw MathError("unsupported coefficient '" + c + "' in fact");
}

class Engine {
 public:
  explicit Engine(DegvTable t) : t_(std::move(t)) {}

  void add_rule(Lit a, Lit b, const std::string& rule) { impls_.push_back({a, b, rule}); }

  void assert_lit(Lit l, bool v, const std::string& why) {
    auto it = val_.find(l);
    if (it != val_.end()) {
      if (it->second.v != v) conflict(l, it->second.why, why);
      return;
    }
    val_[l] = {v, why};
    changed_ = true;
  }

  [[noreturn]] void conflict(Lit l, const std::string& a, const std::string& b) {
    std::ostringstream os;
    os << "inconsistent facts on '" << lit_str(t_, l) << "': " << a << " contradicts " << b;
    throw InconsistentFacts(os.str());
  }

  void propagate() {
    do {
      changed_ = false;
      for (auto& im : impls_) {
        auto f = val_.find(im.from);
        auto g = val_.find(im.to);
        if (f != val_.end() && f->second.v) {
          if (g != val_.end() && !g->second.v)
            conflict(im.to, "'" + f->second.why + "' [" + im.rule + "]", "'" + g->second.why + "'");
          if (g == val_.end()) assert_lit(im.to, true, f->second.why);
        } else if (g != val_.end() && !g->second.v && f == val_.end()) {
          assert_lit(im.from, false, g->second.why);
        }
      }
    } while (changed_);
  }

  std::optional<bool> known(Lit l) const {
    auto it = val_.find(l);
    if (it == val_.end()) return std::nullopt;
    return it->second.v;
  }

  // literal value when deg_v(g) = v, as far as the candidate determines it
  static std::optional<bool> cand(int kind, int v) {
    if (kind == kA) return v == 0;
    if (kind >= kB0) {
      int j = kind - kB0;
      if (v == 0) return true;
      if (v == -1) return j == 0 ? std::optional<bool>(false) : std::nullopt;
      return j < v;
    }
    if (v == 0) return true;
    return std::nullopt;
  }

  bool feasible(std::size_t g, int v) const {
    auto value = [&](Lit l) -> std::optional<bool> {
      if (l.g == g) {
        auto c = cand(l.kind, v);
        auto k = known(l);
        if (c && k && *c != *k) return std::nullopt;  // handled below
        if (c) return c;
        return k;
      }
      return known(l);
    };
    for (int kind = 0; kind < kB0 + K + 1; ++kind) {
      auto c = cand(kind, v);
      auto k = known({g, kind});
      if (c && k && *c != *k) return false;
    }
    for (auto& im : impls_) {
      if (im.from.g != g && im.to.g != g) continue;
      auto a = value(im.from), b = value(im.to);
      if (a && b && *a && !*b) return false;
    }
    return true;
  }

  DegvTable& table() { return t_; }
  std::vector<Impl>& impls() { return impls_; }
  const std::map<Lit, Val>& values() const { return val_; }

 private:
  DegvTable t_;
  std::vector<Impl> impls_;
  std::map<Lit, Val> val_;
  bool changed_ = false;
};

int cap_for_degree(long deg, unsigned p) {
  int n = 0;
  while (deg > ipow_ll(p, static_cast<unsigned>(n)) - 1) ++n;
  return n;
}

}  // namespace

DegvTable degv_infer(const DegvTable& table, std::optional<int> dim, bool split_index_p) {
  DegvTable t = table;
  t.dim = dim;
  t.split_index_p = split_index_p;
  return degv_infer(t);
}

DegvTable degv_infer(const DegvTable& input) {
  Engine E(input);
  DegvTable& t = E.table();
  const unsigned p = t.p;
  require_prime(p);
  std::map<std::string, std::size_t> idx;
  for (std::size_t g = 0; g < t.gens.size(); ++g)
    if (!idx.emplace(t.gens[g].name, g).second) throw MathError("duplicate generator " + t.gens[g].name);

  for (std::size_t g = 0; g < t.gens.size(); ++g) {
    auto& G = t.gens[g];
    auto B = [&](int j) { return Lit{g, kB0 + j}; };
    for (int j = 0; j <= K; ++j) E.add_rule({g, kA}, B(j), "y in Res gives all multiples");
    for (int k : {kPP, kPV, kVV}) E.add_rule({g, kA}, {g, k}, "y in Res gives all multiples");
    for (int j = 1; j <= K; ++j) E.add_rule(B(j), B(j - 1), "downward closure");
    E.add_rule(B(0), {g, kPP}, "ideal closure");
    E.add_rule(B(0), {g, kPV}, "ideal closure");
    E.add_rule(B(1), {g, kPV}, "ideal closure");
    E.add_rule(B(1), {g, kVV}, "ideal closure");
    int cap = cap_for_degree(G.chow_deg, p);
    if (cap <= K) E.add_rule(B(cap), {g, kA}, "dimension bound |y| <= p^" + std::to_string(cap) + "-1");
    if (t.dim) {
      int c = cap_for_degree(*t.dim, p);
      if (c <= K) E.add_rule(B(c), {g, kA}, "dimension bound dim(X) <= p^" + std::to_string(c) + "-1");
    }
    if (t.max_degv) {
      if (*t.max_degv < 0)
        E.assert_lit(B(0), false, "deg_v(X) <= -1");
      else if (*t.max_degv <= K)
        E.add_rule(B(*t.max_degv), {g, kA}, "deg_v(X) <= " + std::to_string(*t.max_degv));
    }
    if (t.split_index_p) E.assert_lit(B(0), true, "split index p*a");
  }
  for (auto& [a, b] : t.related) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) throw MathError("related pair names unknown generator");
    for (int k = 0; k <= kB0 + K; ++k)
      E.add_rule({ia->second, k}, {ib->second, k}, "pullback " + a + " -> " + b);
  }
  for (std::size_t g = 0; g < t.gens.size(); ++g) {
    auto& G = t.gens[g];
    for (auto& raw : G.facts) {
      std::string f = trim(raw);
      if (f == "nonfree") {
        G.nonfree = true;
        continue;
      }
      if (f.rfind("deg_v", 0) == 0 || f.rfind("tor_v", 0) == 0) {
        std::string rest = trim(f.substr(5));
        bool le = rest.rfind("<=", 0) == 0;
        bool eq = !le && rest.rfind("=", 0) == 0;
        if (!le && !eq) throw MathError("cannot parse fact '" + raw + "'");
        int k = std::stoi(trim(rest.substr(le ? 2 : 1)));
        if (f[0] == 't') {
          G.tor_v_bound = k;
          continue;
        }
        if (le) {
          if (k < 0)
            E.assert_lit({g, kB0}, false, f);
          else if (k <= K)
            E.add_rule({g, kB0 + k}, {g, kA}, f);
        } else if (k == -1) {
          E.assert_lit({g, kB0}, false, f);
        } else if (k == 0) {
          E.assert_lit({g, kA}, true, f);
        } else {
          if (k > K) throw MathError("deg_v beyond engine range");
          E.assert_lit({g, kA}, false, f);
          E.assert_lit({g, kB0 + k - 1}, true, f);
          E.assert_lit({g, kB0 + k}, false, f);
        }
        continue;
      }
      bool neg = f.find(" notin ") != std::string::npos;
      auto pos = f.find(neg ? " notin " : " in ");
      if (pos == std::string::npos) throw MathError("cannot parse fact '" + raw + "'");
      std::string right = trim(f.substr(pos + (neg ? 7 : 4)));
      if (right != "Res" && right != "Res_Omega" && right != "Res_CH")
        throw MathError("unknown target '" + right + "' in fact '" + raw + "'");
      std::string left = trim(f.substr(0, pos));
      std::string coef;
      bool matched = false;
      for (const std::string& nm : {G.name, std::string("y")}) {
        if (left == nm) {
          matched = true;
          break;
        }
        if (left.size() > nm.size() + 1 && left.compare(left.size() - nm.size(), nm.size(), nm) == 0 &&
            left[left.size() - nm.size() - 1] == '*') {
          coef = left.substr(0, left.size() - nm.size() - 1);
          matched = true;
          break;
        }
      }
      if (!matched) throw MathError("fact '" + raw + "' does not mention generator " + G.name);
      E.assert_lit({g, coef_kind(coef, p)}, !neg, f);
    }
  }
  E.propagate();

  for (std::size_t g = 0; g < t.gens.size(); ++g) {
    auto& G = t.gens[g];
    std::vector<int> ok;
    for (int v = -1; v <= K; ++v)
      if (E.feasible(g, v)) ok.push_back(v);
    if (ok.empty()) {
      std::ostringstream os;
      os << "inconsistent facts: no value of deg_v(" << G.name << ") fits {";
      for (std::size_t i = 0; i < G.facts.size(); ++i) os << (i ? ", " : "") << G.facts[i];
      os << "}";
      throw InconsistentFacts(os.str());
    }
    G.lo = ok.front();
    G.hi = ok.back() == K ? std::nullopt : std::optional<int>(ok.back());
    auto kn = [&](int kind) { return E.known({g, kind}); };
    G.pattern.clear();
    if (kn(kPP) == true && kn(kB0) == false && kn(kPV) == true && kn(kVV) == true)
      G.pattern = "M''";
    else if (kn(kB0) == true && kn(kB0 + 1) == false && kn(kVV) == true)
      G.pattern = "M'";
    G.derived.clear();
    for (auto& [l, v] : E.values())
      if (l.g == g) G.derived.push_back(coef_name(l.kind) + G.name + (v.v ? " in Res" : " notin Res"));
    G.tor_v_c.clear();
    if (t.injective_res && G.resolved() && G.lo > 0)
      for (int i = 0; i < G.lo; ++i) G.tor_v_c.push_back(i);
    if (t.dim && !G.tor_v_bound) G.tor_v_bound = cap_for_degree(*t.dim, p);
  }
  return t;
}

GradedModule qx_module(const DegvTable& t) {
  std::vector<std::string> open, bad;
  for (auto& g : t.gens) {
    if (g.nonfree) bad.push_back(g.name);
    if (!g.resolved()) open.push_back(g.name);
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  if (!bad.empty()) throw MathError("refusing Q(X): generators flagged non-free: " + join(bad));
  if (!open.empty()) throw MathError("refusing Q(X): deg_v undetermined for " + join(open));
  GradedModule out(t.p);
  for (auto& g : t.gens) {
    if (g.pattern == "M'")
      out = out.direct_sum(ideal_pattern_module(ideal_p_v1sq(t.p), g.chow_deg));
    else if (g.pattern == "M''")
      out = out.direct_sum(ideal_pattern_module(ideal_p2_pv1_v1sq(t.p), g.chow_deg));
    else
      out = out.direct_sum(mn_module(g.lo, t.p, g.chow_deg).module);
  }
  return out;
}

DegvTable degv_from_json(const nlohmann::json& j) {
  DegvTable t;
  t.p = j.value("p", 2u);
  for (auto& g : j.at("generators")) {
    DegvGenerator G;
    G.name = g.at("name").get<std::string>();
    G.chow_deg = g.at("chow_deg").get<int>();
    if (g.contains("facts")) G.facts = g.at("facts").get<std::vector<std::string>>();
    G.nonfree = g.value("nonfree", false);
    t.gens.push_back(G);
  }
  if (j.contains("dim") && !j.at("dim").is_null()) t.dim = j.at("dim").get<int>();
  t.split_index_p = j.value("split_index_p", false);
  if (j.contains("max_degv")) t.max_degv = j.at("max_degv").get<int>();
  t.injective_res = j.value("injective_res", false);
  if (j.contains("related"))
    for (auto& r : j.at("related")) t.related.emplace_back(r.at("from").get<std::string>(), r.at("to").get<std::string>());
  return t;
}

nlohmann::json degv_to_json(const DegvTable& t) {
  nlohmann::json j;
  j["p"] = t.p;
  if (t.dim) j["dim"] = *t.dim;
  j["split_index_p"] = t.split_index_p;
  nlohmann::json gens = nlohmann::json::array();
  for (auto& g : t.gens) {
    nlohmann::json e{{"name", g.name}, {"chow_deg", g.chow_deg}, {"facts", g.facts}};
    if (g.resolved())
      e["deg_v"] = g.lo;
    else
      e["deg_v"] = {{"lo", g.lo}, {"hi", g.hi ? nlohmann::json(*g.hi) : nlohmann::json(nullptr)}};
    if (!g.pattern.empty()) e["pattern"] = g.pattern;
    if (g.nonfree) e["nonfree"] = true;
    e["derived"] = g.derived;
    if (!g.tor_v_c.empty()) e["tor_v_c"] = g.tor_v_c;
    if (g.tor_v_bound) e["tor_v_bound"] = *g.tor_v_bound;
    gens.push_back(e);
  }
  j["generators"] = gens;
  return j;
}

}  // namespace chowcob
