#pragma once

#include <map>
#include <string>

#include "chowcob/coeff/smith.hpp"

namespace chowcob {

struct DegreeGroup {
  long free_rank = 0;
  std::map<int, long> torsion;  // k -> multiplicity of Z/p^k
  bool empty() const { return free_rank == 0 && torsion.empty(); }
  long torsion_count() const;
  bool operator==(const DegreeGroup&) const = default;
};

// Additive invariants per degree.  Degrees are Chow degrees unless a
// producer documents otherwise (the BP quotients use topological degree).
class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(unsigned p) : p_(p) {}

  unsigned p() const { return p_; }
  const std::map<int, DegreeGroup>& groups() const { return groups_; }

  void add_free(int deg, long n = 1);
  void add_torsion(int deg, int k, long n = 1);
  void add(int deg, const Cokernel& c);
  void add(int deg, const DegreeGroup& g);

  DegreeGroup at(int deg) const;
  long free_total() const;
  long torsion_total() const;
  // dim over F_p of M/p in each degree
  std::map<int, long> mod_p_dims() const;
  long mod_p_total() const;

  GradedModule shifted(int s) const;
  GradedModule direct_sum(const GradedModule& o) const;
  // Z_(p)-tensor of the additive groups, ignoring Tor terms
  GradedModule tensor(const GradedModule& o) const;
  GradedModule restricted(int lo, int hi) const;

  bool operator==(const GradedModule& o) const { return p_ == o.p_ && groups_ == o.groups_; }
  std::string str() const;

 private:
  void prune(int deg);
  unsigned p_ = 0;
  std::map<int, DegreeGroup> groups_;
};

// an F_p-graded dimension vector, used by additive comparisons
using DimSeries = std::map<int, long>;
DimSeries tensor_dims(const DimSeries& a, const DimSeries& b);

}  // namespace chowcob
