#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "chowcob/gralg/algebra.hpp"
#include "chowcob/gralg/graded_module.hpp"
#include "chowcob/gralg/parse.hpp"
#include "chowcob/kernels/kernels.hpp"

namespace chowcob {

struct AlgebraPresentation {
  AlgebraPtr algebra;
  std::vector<Polynomial> relations;
  std::vector<std::pair<std::string, Polynomial>> definitions;  // declaration order
  int truncation = 0;  // Chow degree bound; 0 selects the default
  bool partial = false;

  unsigned p() const { return algebra->p(); }
  CoeffMode mode() const { return algebra->mode(); }
  // explicit truncation, else 2 * (largest relation Chow degree)
  int effective_truncation() const;
  Definitions definition_map() const;
  Polynomial parse(const std::string& s) const;
};

AlgebraPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const AlgebraPresentation& P);

// tensor with F_p: same generators, relations reduced mod p
AlgebraPresentation reduce_mod_p(const AlgebraPresentation& P);
// generators in `kill` are set to zero and dropped
AlgebraPresentation kill_generators(const AlgebraPresentation& P, const std::vector<std::string>& kill);

// additive invariants of the quotient in each Chow degree of [lo, hi]
GradedModule graded_groups(const AlgebraPresentation& P, int lo, int hi, Exec ex = Exec::parallel);
GradedModule graded_groups_serial(const AlgebraPresentation& P, int lo, int hi);

nlohmann::json graded_module_to_json(const GradedModule& M, const std::string& degree_key = "chow_deg");

}  // namespace chowcob
