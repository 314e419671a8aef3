#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chowcob/gralg/presentation.hpp"

namespace chowcob {

struct CatalogueEntry {
  std::string key;
  AlgebraPresentation presentation;
  nlohmann::json metadata;  // group, p, torsion_index_p, source, torus
  std::vector<std::string> torus() const;
};

// keys of the bundled data plus the parametric families so_odd_gp(l), so_odd_gt(l)
std::vector<std::string> catalogue_keys();
CatalogueEntry catalogue(const std::string& key);
CatalogueEntry catalogue_from_json(const nlohmann::json& j);
nlohmann::json catalogue_to_json(const CatalogueEntry& e);

// Z[t,y]/(t^l - 2y, y^2), |y| = l (Chow)
CatalogueEntry so_odd_gp(int l);
// SO(2l+1)/T: Z[t_1..t_{l-1}, t, y_2..y_{2(l-1)}, y]/(c'_i - 2y_{2i}, J_{2i}, t^l - 2y, y^2)
CatalogueEntry so_odd_gt(int l);

// set the torus generators to zero
AlgebraPresentation grothendieck_quotient(const CatalogueEntry& e);

}  // namespace chowcob
