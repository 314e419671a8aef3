#pragma once

#include <string>
#include <vector>

#include "chowcob/gralg/presentation.hpp"

namespace chowcob {

struct TypeITwisted {
  AlgebraPresentation presentation;  // F_p[t]/(bbar_i bbar_j (i,j <= 2p-2), bbar_k (k > 2p-2))
  AlgebraPresentation st_bar;        // F_p[t]/(bbar)
  DimSeries comparison;              // F_p{1, bbar_1..bbar_{2p-2}} (x) S-bar(t)
};

// St: the polynomial ring in the torus generators; bbars in index order
TypeITwisted type_I_twisted(const AlgebraPtr& St, const std::vector<Polynomial>& bbars, int D = -1);

struct AdditiveReport {
  bool ok = true;
  int first_mismatch = 0;
  DimSeries expected, actual;
};

// target/p == (core/p) (x) (cofactor/p) degreewise on [lo, hi]
AdditiveReport psz_additive_check(const GradedModule& core, const GradedModule& cofactor, const GradedModule& target,
                                  int lo = 0, int hi = 1 << 20);
// same with F_p dimension series
AdditiveReport compare_dims(const DimSeries& expected, const DimSeries& actual, int lo, int hi);

// dimension series of an F_p presentation through D, from the Groebner basis
DimSeries fp_dims(const AlgebraPresentation& P, int D);

}  // namespace chowcob
