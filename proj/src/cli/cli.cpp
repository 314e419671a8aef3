#include "chowcob/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chowcob/dickson/dickson.hpp"
#include "chowcob/flag/catalogue.hpp"
#include "chowcob/flag/constructors.hpp"
#include "chowcob/flag/e8.hpp"
#include "chowcob/flag/quadric.hpp"
#include "chowcob/gralg/groebner.hpp"
#include "chowcob/motive/degv.hpp"
#include "chowcob/motive/modules.hpp"
#include "chowcob/steenrod/bundled.hpp"
#include "chowcob/steenrod/checks.hpp"

namespace chowcob::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kCheckFailed = 2;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MathError(path + ": " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw MathError("range must look like a..b");
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

std::map<int, int> parse_f_list(const std::string& s, int first) {
  std::map<int, int> out;
  int j = first;
  for (int v : parse_int_list(s)) out[j++] = v;
  return out;
}

std::string torsion_str(const DegreeGroup& g, unsigned p) {
  if (g.torsion.empty()) return "-";
  std::string s;
  for (auto& [k, m] : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + ipow(p, static_cast<unsigned>(k)).get_str();
    if (m > 1) s += " (x" + std::to_string(m) + ")";
  }
  return s;
}

void print_module(std::ostream& out, const GradedModule& M) {
  out << "chow_deg  free  torsion\n";
  for (auto& [d, g] : M.groups()) {
    std::ostringstream row;
    row << d;
    std::string a = row.str();
    a.resize(std::max<std::size_t>(a.size(), 10), ' ');
    std::string b = std::to_string(g.free_rank);
    b.resize(std::max<std::size_t>(b.size(), 6), ' ');
    out << a << b << torsion_str(g, M.p()) << "\n";
  }
  out << "total: free " << M.free_total() << ", torsion " << M.torsion_total() << "\n";
}

json module_json(const GradedModule& M) {
  return {{"p", M.p()}, {"groups", graded_module_to_json(M)}, {"free_total", M.free_total()},
          {"torsion_total", M.torsion_total()}};
}

json envelope(const std::string& cmd) { return {{"schema", 1}, {"command", cmd}}; }

AlgebraPresentation load_presentation(const std::string& file, const std::string& key) {
  if (!file.empty()) {
    json j = read_json(file);
    return j.contains("presentation") ? catalogue_from_json(j).presentation : presentation_from_json(j);
  }
  if (!key.empty()) return catalogue(key).presentation;
  throw MathError("give --file or --key");
}

std::string dims_str(const DimSeries& d) {
  std::string s;
  for (auto& [k, v] : d) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
  return s.empty() ? "(empty)" : s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chowcob: Chow rings, Milnor operations and motivic torsion, computed exactly"};
  app.require_subcommand(1);
  int status = kOk;
  std::function<void()> action;

  // dickson
  int dn = 2;
  unsigned dp = 2;
  bool djson = false, dverify = false, dd = false;
  auto* sd = app.add_subcommand("dickson", "Dickson classes c_{n,i}, e_n, and the Milnor composite identity");
  sd->add_option("--n", dn, "rank")->required();
  sd->add_option("--p", dp, "prime")->required();
  sd->add_flag("--verify", dverify, "compare e_n c_{n,i} with Q_0..^Q_i..Q_n(x_1...x_n)");
  sd->add_flag("--d", dd, "also print d_{n,i} (p = 2) and the index-convention search");
  sd->add_flag("--json", djson, "JSON output");
  sd->callback([&] {
    action = [&] {
      auto D = dickson_classes(dn, dp);
      auto E = euler_class(dn, dp);
      json j = envelope("dickson");
      j["n"] = dn;
      j["p"] = dp;
      for (int i = dn - 1; i >= 0; --i) {
        std::string name = "c_" + std::to_string(dn) + "," + std::to_string(i);
        if (djson)
          j["c"][std::to_string(i)] = D.c[static_cast<std::size_t>(i)].str();
        else
          out << name << " = " << D.c[static_cast<std::size_t>(i)].str() << "\n";
      }
      if (djson) {
        j["e"] = E.e.str();
        j["lambda"] = E.lambda;
      } else {
        out << "e_" << dn << " = " << E.e.str() << "\n";
        out << "e_" << dn << "^" << dp - 1 << " = " << E.lambda << " * c_" << dn << ",0\n";
      }
      if (dd) {
        if (dp != 2) throw MathError("d_{n,i} exist only at p = 2");
        auto d = d_classes(dn);
        for (int i = dn - 1; i >= 0; --i) {
          if (djson)
            j["d"][std::to_string(i)] = d[static_cast<std::size_t>(i)].str();
          else
            out << "d_" << dn << "," << i << " = " << d[static_cast<std::size_t>(i)].str() << "\n";
        }
        auto matches = d_convention_search(dn);
        json jm = json::array();
        for (auto& m : matches) {
          std::string S;
          for (int s : m.S) S += (S.empty() ? "" : ",") + std::to_string(s);
          jm.push_back({{"i", m.i}, {"S", m.S}, {"convention", m.convention}});
          if (!djson) out << "d_" << dn << "," << m.i << " = Q_{" << S << "}(x_1...x_n) under " << m.convention << "\n";
        }
        if (matches.empty() && !djson) out << "no index set reproduces any d_" << dn << ",i\n";
        j["d_conventions"] = jm;
      }
      if (dverify) {
        auto rep = verify_mimura_kameko(dn, dp);
        json rows = json::array();
        for (auto& r : rep.rows) {
          rows.push_back({{"i", r.i},
                          {"composite", r.composite.str()},
                          {"product", r.product.str()},
                          {"scalar", r.scalar ? json(*r.scalar) : json(nullptr)}});
          if (!djson)
            out << "i=" << r.i << ": " << (r.scalar ? "ok, scalar " + std::to_string(*r.scalar) : "MISMATCH") << "\n";
        }
        j["mimura_kameko"] = rows;
        j["ok"] = rep.ok();
        if (!rep.ok()) status = kCheckFailed;
      }
      if (djson) out << j.dump(2) << "\n";
    };
  });

  // milnor
  std::string mtable = "bzp_2", mexpr;
  unsigned mp = 2;
  int mhat = -1, mn = 0, mimax = 1, mbound = 10, mq = -1, mpow = -1;
  bool mverify = false, mjson = false;
  auto* sm = app.add_subcommand("milnor", "Milnor operations on bundled tables");
  sm->add_option("--table", mtable, "bzp_<n>, so_<m>, g2, f4");
  sm->add_option("--p", mp, "prime for bzp tables");
  sm->add_option("--expr", mexpr, "polynomial to act on");
  sm->add_option("--hat", mhat, "omitted index of the composite");
  sm->add_option("--n", mn, "largest index of the composite");
  sm->add_option("--Q", mq, "apply a single Q_i");
  sm->add_option("--P", mpow, "apply a single P^k (Sq^{2k} at p = 2)");
  sm->add_flag("--verify", mverify, "check Q_{i+1} = Q_i P^{p^i} - P^{p^i} Q_i");
  sm->add_option("--i-max", mimax, "largest i for --verify");
  sm->add_option("--bound", mbound, "Chow degree bound for --verify");
  sm->add_flag("--json", mjson, "JSON output");
  sm->callback([&] {
    action = [&] {
      OperationTable T = bundled_table(mtable, mp);
      json j = envelope("milnor");
      j["table"] = T.name();
      if (mverify) {
        auto rep = verify_Q_recursion(T, mimax, mbound);
        j["ok"] = rep.ok;
        j["checked"] = rep.checked;
        if (!rep.ok) {
          j["counterexample"] = rep.counterexample->str();
          j["detail"] = rep.detail;
          status = kCheckFailed;
        }
        if (mjson)
          out << j.dump(2) << "\n";
        else if (rep.ok)
          out << "recursion holds on " << rep.checked << " cases\n";
        else
          out << "counterexample: " << rep.detail << "\n";
        return;
      }
      if (mexpr.empty()) throw MathError("--expr is required unless --verify is given");
      Polynomial f = T.parse(mexpr);
      Polynomial r = f;
      if (mq >= 0)
        r = apply_Q(mq, f, T);
      else if (mpow >= 0)
        r = apply_power(mpow, f, T);
      else if (mhat >= -1 && (mn > 0 || mhat >= 0))
        r = milnor_composite(mhat, mn, f, T);
      j["input"] = f.str();
      j["result"] = r.str();
      if (mjson)
        out << j.dump(2) << "\n";
      else
        out << r.str() << "\n";
    };
  });

  // graded
  std::string gfile, gkey, grange;
  bool gjson = false, gmodp = false, gserial = false;
  auto* sg = app.add_subcommand("graded", "additive invariants of a presentation per Chow degree");
  sg->add_option("--file", gfile, "presentation or catalogue JSON");
  sg->add_option("--key", gkey, "catalogue key");
  sg->add_option("--range", grange, "Chow degrees a..b")->required();
  sg->add_flag("--mod-p", gmodp, "reduce the presentation mod p first");
  sg->add_flag("--serial", gserial, "single-threaded reference path");
  sg->add_flag("--json", gjson, "JSON output");
  sg->callback([&] {
    action = [&] {
      auto P = load_presentation(gfile, gkey);
      if (gmodp) P = reduce_mod_p(P);
      auto [lo, hi] = parse_range(grange);
      auto M = gserial ? graded_groups_serial(P, lo, hi) : graded_groups(P, lo, hi);
      if (gjson) {
        json j = envelope("graded");
        j["range"] = {lo, hi};
        j["module"] = module_json(M);
        out << j.dump(2) << "\n";
      } else {
        print_module(out, M);
      }
    };
  });

  // hilbert
  std::string hfile, hkey;
  int hD = -1;
  bool hjson = false, hregular = false;
  auto* sh = app.add_subcommand("hilbert", "Hilbert series of an F_p presentation");
  sh->add_option("--file", hfile);
  sh->add_option("--key", hkey);
  sh->add_option("--D", hD, "degree bound (default: the presentation truncation)");
  sh->add_flag("--regular", hregular, "test whether the relations form a regular sequence");
  sh->add_flag("--json", hjson, "JSON output");
  sh->callback([&] {
    action = [&] {
      auto P = load_presentation(hfile, hkey);
      if (P.mode() != CoeffMode::fp) P = reduce_mod_p(P);
      int D = hD >= 0 ? hD : P.effective_truncation();
      auto H = hilbert_series(P, D);
      json j = envelope("hilbert");
      j["D"] = D;
      j["coeffs"] = H.coeffs;
      j["total"] = H.total();
      if (!hjson) out << H.str() << "\ntotal " << H.total() << "\n";
      if (hregular) {
        auto R = regular_sequence_check(P.algebra, P.relations, hD);
        j["regular"] = R.regular;
        j["regular_bound"] = R.bound;
        if (!hjson) out << (R.regular ? "regular sequence" : "not a regular sequence") << " (checked to degree " << R.bound << ")\n";
        if (!R.regular) status = kCheckFailed;
      }
      if (hjson) out << j.dump(2) << "\n";
    };
  });

  // catalogue
  std::string ckey;
  bool cjson = false, cgroth = false;
  auto* sc = app.add_subcommand("catalogue", "bundled presentations");
  sc->add_option("--key", ckey, "entry; omit to list keys");
  sc->add_flag("--grothendieck", cgroth, "print the quotient by the torus generators");
  sc->add_flag("--json", cjson, "JSON output");
  sc->callback([&] {
    action = [&] {
      if (ckey.empty()) {
        json j = envelope("catalogue");
        j["keys"] = catalogue_keys();
        if (cjson)
          out << j.dump(2) << "\n";
        else
          for (auto& k : catalogue_keys()) out << k << "\n";
        return;
      }
      auto e = catalogue(ckey);
      AlgebraPresentation P = cgroth ? grothendieck_quotient(e) : e.presentation;
      if (cjson) {
        json j = envelope("catalogue");
        j["entry"] = catalogue_to_json(e);
        if (cgroth) j["grothendieck_quotient"] = presentation_to_json(P);
        out << j.dump(2) << "\n";
        return;
      }
      out << e.key << " [" << e.metadata.value("source", "") << "]\n";
      out << "generators:";
      for (auto& g : P.algebra->gens()) out << " " << g.name << "(" << g.top_degree / 2 << ")";
      out << "\n";
      for (auto& [n, f] : P.definitions) out << "  " << n << " = " << f.str() << "\n";
      out << "relations:\n";
      for (auto& r : P.relations) out << "  " << r.str() << "\n";
    };
  });

  // twisted
  std::string tgroup = "g2";
  int tD = -1;
  bool tjson = false;
  auto* st = app.add_subcommand("twisted", "type (I) twisted ring from the bbar relations");
  st->add_option("--group", tgroup, "g2 or f4, or a catalogue key carrying metadata.bbar");
  st->add_option("--D", tD, "Chow degree bound");
  st->add_flag("--json", tjson, "JSON output");
  st->callback([&] {
    action = [&] {
      std::string key = tgroup == "g2" ? "g2_st_bar" : tgroup == "f4" ? "f4_bbar" : tgroup;
      auto e = catalogue(key);
      if (!e.metadata.contains("bbar")) throw MathError(key + " carries no bbar list");
      std::vector<Polynomial> b;
      for (auto& s : e.metadata.at("bbar")) b.push_back(e.presentation.parse(s.get<std::string>()));
      auto T = type_I_twisted(e.presentation.algebra, b, tD);
      int D = T.presentation.truncation;
      auto rep = compare_dims(T.comparison, fp_dims(T.presentation, D), 0, D);
      if (!rep.ok) status = kCheckFailed;
      if (tjson) {
        json j = envelope("twisted");
        j["presentation"] = presentation_to_json(T.presentation);
        j["dims"] = rep.actual;
        j["comparison"] = rep.expected;
        j["ok"] = rep.ok;
        out << j.dump(2) << "\n";
      } else {
        out << "relations:\n";
        for (auto& r : T.presentation.relations) out << "  " << r.str() << "\n";
        out << "dims:       " << dims_str(rep.actual) << "\n";
        out << "comparison: " << dims_str(rep.expected) << "\n";
        out << (rep.ok ? "agree" : "differ at degree " + std::to_string(rep.first_mismatch)) << " through " << D << "\n";
      }
    };
  });

  // quadric
  int qmax = 0, qmin = 0, ql = 0, qsplit = 0, qd_embed = -1;
  std::string qd, qf, qfx, qfy;
  bool qjson = false;
  auto* sq = app.add_subcommand("quadric", "Q(X) of an anisotropic quadric, or embedding bounds");
  sq->add_option("--pfister-max", qmax, "maximal neighbor of the (n+1)-fold Pfister form");
  sq->add_option("--pfister-min", qmin, "minimal neighbor of the (n+1)-fold Pfister form");
  sq->add_option("--l", ql, "dim X = 2l - 1");
  sq->add_option("--d", qd, "d_0,...,d_{l-1}");
  sq->add_option("--f", qf, "f_1,...,f_s");
  sq->add_option("--split", qsplit, "split quadric with this l");
  sq->add_option("--embed-x", qfx, "f_0,f_1,... of X");
  sq->add_option("--embed-y", qfy, "f_0,f_1,... of Y");
  sq->add_option("--embed-d", qd_embed, "codimension step d");
  sq->add_flag("--json", qjson, "JSON output");
  sq->callback([&] {
    action = [&] {
      json j = envelope("quadric");
      if (!qfx.empty() || !qfy.empty()) {
        if (qfx.empty() || qfy.empty() || qd_embed < 0) throw MathError("--embed-x, --embed-y and --embed-d go together");
        auto rep = quadric_embedding_bounds(parse_f_list(qfx, 0), parse_f_list(qfy, 0), qd_embed);
        j["ok"] = rep.ok;
        j["failing"] = rep.failing;
        if (!rep.ok) status = kCheckFailed;
        if (qjson) {
          out << j.dump(2) << "\n";
        } else if (rep.ok) {
          out << "bounds hold\n";
        } else {
          out << "bounds fail at j =";
          for (int f : rep.failing) out << " " << f;
          out << "\n";
        }
        return;
      }
      QuadricSpec s;
      if (qmax)
        s = QuadricSpec::pfister_max(qmax);
      else if (qmin)
        s = QuadricSpec::pfister_min(qmin);
      else if (qsplit)
        s = QuadricSpec::split(qsplit);
      else if (ql && !qd.empty())
        s = QuadricSpec::from_d(ql, parse_int_list(qd));
      else if (ql) {
        s.l = ql;
        s.f = parse_f_list(qf, 1);
      } else
        throw MathError("choose --pfister-max, --pfister-min, --split, or --l with --d/--f");
      auto r = quadric_qx(s);
      bool agree = r.closed_form == r.from_groups && r.closed_form == r.from_degv;
      if (!agree) status = kCheckFailed;
      if (qjson) {
        j["l"] = s.l;
        j["d"] = s.d();
        j["f"] = json::object();
        for (auto& [k, v] : s.f) j["f"][std::to_string(k)] = v;
        j["presentation"] = presentation_to_json(r.presentation);
        j["module"] = module_json(r.closed_form);
        j["cross_checks_agree"] = agree;
        if (s.anisotropic) {
          j["J"] = r.J;
          j["J_partition"] = r.partition;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "relations:";
        for (auto& rel : r.presentation.relations) out << " " << rel.str() << ";";
        out << "\n";
        print_module(out, r.closed_form);
        if (s.anisotropic) {
          out << "J:";
          for (int x : r.J) out << " " << x;
          out << (r.partition ? "  (partition of 0..l-1)" : "  (not a partition)") << "\n";
        }
        out << (agree ? "presentation and deg_v sum agree" : "CROSS-CHECK MISMATCH") << "\n";
      }
    };
  });

  // rost
  int rn = 2, rm = -1;
  unsigned rp = 2;
  bool rjson = false;
  auto* sr = app.add_subcommand("rost", "Chow groups of the Rost motive, or its Morava localization");
  sr->add_option("--n", rn)->required();
  sr->add_option("--p", rp)->required();
  sr->add_option("--morava", rm, "localize Res_Omega at K(m)");
  sr->add_flag("--json", rjson, "JSON output");
  sr->callback([&] {
    action = [&] {
      GradedModule M = rm >= 0 ? morava_localize(rost_res_omega(rn, rp), rm) : rost_chow(rn, rp);
      if (rjson) {
        json j = envelope("rost");
        j["n"] = rn;
        j["p"] = rp;
        if (rm >= 0) j["morava"] = rm;
        j["module"] = module_json(M);
        out << j.dump(2) << "\n";
      } else {
        if (rm >= 0) out << "degrees are residues mod p^m - 1\n";
        print_module(out, M);
      }
    };
  });

  // degv
  std::string vfile;
  bool vjson = false, vq = false;
  auto* sv = app.add_subcommand("degv", "close deg_v facts and optionally build Q(X)");
  sv->add_option("--file", vfile, "DegvTable JSON")->required();
  sv->add_flag("--qx", vq, "also print Q(X)");
  sv->add_flag("--json", vjson, "JSON output");
  sv->callback([&] {
    action = [&] {
      auto t = degv_infer(degv_from_json(read_json(vfile)));
      if (vjson) {
        json j = envelope("degv");
        j["table"] = degv_to_json(t);
        if (vq) j["qx"] = module_json(qx_module(t));
        out << j.dump(2) << "\n";
        return;
      }
      for (auto& g : t.gens) {
        out << g.name << " (chow " << g.chow_deg << "): deg_v ";
        if (g.resolved())
          out << "= " << g.lo;
        else
          out << "in [" << g.lo << ", " << (g.hi ? std::to_string(*g.hi) : "inf") << "]";
        if (!g.pattern.empty()) out << ", pattern " << g.pattern;
        out << "\n";
      }
      if (vq) print_module(out, qx_module(t));
    };
  });

  // e8check
  bool ejson = false;
  auto* se = app.add_subcommand("e8check", "degree and rewrite checks on the E8 (p = 3) b-table");
  se->add_flag("--json", ejson, "JSON output");
  se->callback([&] {
    action = [&] {
      auto rep = e8_consistency();
      if (!rep.ok()) status = kCheckFailed;
      if (ejson) {
        json j = envelope("e8check");
        for (auto& d : rep.degrees)
          j["degrees"].push_back({{"name", d.name}, {"expected", d.expected}, {"actual", d.actual}, {"ok", d.ok}});
        for (auto& r : rep.rewrites)
          j["rewrites"].push_back({{"rule", r.rule}, {"source", r.source}, {"target", r.target}, {"image", r.image},
                                   {"unit", r.unit}, {"ok", r.ok}});
        j["ok"] = rep.ok();
        out << j.dump(2) << "\n";
        return;
      }
      for (auto& d : rep.degrees)
        out << d.name << ": chow " << (d.homogeneous ? std::to_string(d.actual) : "inhomogeneous") << " (expected "
            << d.expected << ") " << (d.ok ? "ok" : "FAIL") << "\n";
      for (auto& r : rep.rewrites)
        out << r.rule << "(" << r.source << ") = " << r.image << " = " << r.unit << " * " << r.target << " "
            << (r.ok ? "ok" : "FAIL") << "\n";
    };
  });

  // so-image
  int sm_m = 11;
  bool sjson = false;
  auto* ss = app.add_subcommand("so-image", "y_{2i} of SO(m) hit by Steenrod operations");
  ss->add_option("--m", sm_m)->required();
  ss->add_flag("--json", sjson, "JSON output");
  ss->callback([&] {
    action = [&] {
      auto hit = so_steenrod_image(sm_m);
      if (sjson) {
        json j = envelope("so-image");
        j["m"] = sm_m;
        for (auto& [i, h] : hit) j["hit"][std::to_string(i)] = h;
        out << j.dump(2) << "\n";
        return;
      }
      for (auto& [i, h] : hit) out << "y" << 2 * i << ": " << (h ? "hit" : "not hit") << "\n";
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  try {
    if (action) action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}

}  // namespace chowcob::cli
