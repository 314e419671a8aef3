#include "chowcob/gralg/graded_module.hpp"

#include <algorithm>
#include <sstream>

namespace chowcob {

long DegreeGroup::torsion_count() const {
  long n = 0;
  for (auto& [k, m] : torsion) n += m;
  return n;
}

void GradedModule::prune(int deg) {
  auto it = groups_.find(deg);
  if (it != groups_.end() && it->second.empty()) groups_.erase(it);
}

void GradedModule::add_free(int deg, long n) {
  groups_[deg].free_rank += n;
  prune(deg);
}

void GradedModule::add_torsion(int deg, int k, long n) {
  if (k <= 0 || n == 0) return;
  groups_[deg].torsion[k] += n;
  prune(deg);
}

void GradedModule::add(int deg, const Cokernel& c) {
  add_free(deg, c.free_rank);
  for (auto& [k, m] : c.torsion) add_torsion(deg, k, m);
}

void GradedModule::add(int deg, const DegreeGroup& g) {
  add_free(deg, g.free_rank);
  for (auto& [k, m] : g.torsion) add_torsion(deg, k, m);
}

DegreeGroup GradedModule::at(int deg) const {
  auto it = groups_.find(deg);
  return it == groups_.end() ? DegreeGroup{} : it->second;
}

long GradedModule::free_total() const {
  long n = 0;
  for (auto& [d, g] : groups_) n += g.free_rank;
  return n;
}

long GradedModule::torsion_total() const {
  long n = 0;
  for (auto& [d, g] : groups_) n += g.torsion_count();
  return n;
}

std::map<int, long> GradedModule::mod_p_dims() const {
  std::map<int, long> out;
  for (auto& [d, g] : groups_) out[d] = g.free_rank + g.torsion_count();
  return out;
}

long GradedModule::mod_p_total() const { return free_total() + torsion_total(); }

GradedModule GradedModule::shifted(int s) const {
  GradedModule m(p_);
  for (auto& [d, g] : groups_) m.groups_[d + s] = g;
  return m;
}

GradedModule GradedModule::direct_sum(const GradedModule& o) const {
  GradedModule m = *this;
  if (!m.p_) m.p_ = o.p_;
  for (auto& [d, g] : o.groups_) m.add(d, g);
  return m;
}

GradedModule GradedModule::tensor(const GradedModule& o) const {
  GradedModule m(p_ ? p_ : o.p_);
  for (auto& [a, ga] : groups_)
    for (auto& [b, gb] : o.groups_) {
      int d = a + b;
      m.add_free(d, ga.free_rank * gb.free_rank);
      for (auto& [k, n] : ga.torsion) m.add_torsion(d, k, n * gb.free_rank);
      for (auto& [k, n] : gb.torsion) m.add_torsion(d, k, n * ga.free_rank);
      for (auto& [k, n] : ga.torsion)
        for (auto& [l, q] : gb.torsion) m.add_torsion(d, std::min(k, l), n * q);
    }
  return m;
}

GradedModule GradedModule::restricted(int lo, int hi) const {
  GradedModule m(p_);
  for (auto& [d, g] : groups_)
    if (d >= lo && d <= hi) m.groups_[d] = g;
  return m;
}

std::string GradedModule::str() const {
  std::ostringstream os;
  for (auto& [d, g] : groups_) {
    os << d << ": ";
    bool first = true;
    if (g.free_rank) {
      os << "Z^" << g.free_rank;
      first = false;
    }
    for (auto& [k, n] : g.torsion) {
      if (!first) os << " + ";
      os << "(Z/" << p_ << "^" << k << ")^" << n;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

DimSeries tensor_dims(const DimSeries& a, const DimSeries& b) {
  DimSeries out;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b)
      if (x != 0 && y != 0) out[i + j] += x * y;
  return out;
}

}  // namespace chowcob
