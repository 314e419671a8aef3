#pragma once

#include <string>
#include <vector>

#include "chowcob/gralg/algebra.hpp"

namespace chowcob {

struct BEntry {
  std::string name;
  Polynomial expr;  // in Z_(3)[v1, v2, y, y']
  int chow_deg;
};

struct BTable {
  AlgebraPtr algebra;
  std::vector<BEntry> entries;
  const BEntry& at(const std::string& name) const;
};

BTable e8_btable();

struct DegreeRow {
  std::string name;
  int expected;
  long actual;  // Chow degree, or a sentinel when inhomogeneous
  bool homogeneous;
  bool ok;
};

struct RewriteRow {
  std::string rule;    // r_D1, r_D2, r_3D1, r_6D1
  std::string source;  // b-entry acted on
  std::string target;  // b-entry expected
  std::string image;
  std::string unit;    // image = unit * target
  bool ok;
};

struct E8Report {
  std::vector<DegreeRow> degrees;
  std::vector<RewriteRow> rewrites;
  bool ok() const;
};

// leading-term rules: r_D1 v1 -> 3, r_D2 v2 -> 3, r_{k D1} acts on y through
// the total operation y -> y + y' t, taking the t^{k/3} coefficient
Polynomial e8_rewrite(const std::string& rule, const Polynomial& f);
E8Report e8_consistency(const BTable& t);
E8Report e8_consistency();

}  // namespace chowcob
