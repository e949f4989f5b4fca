#pragma once

#include "permlei/series.hpp"

namespace permlei {

// Hilbert-Poincare series of the pre-Poisson operad: c_0 = 0 and c_n =
// Catalan(n), generated by the Catalan recurrence (no series square
// roots anywhere).
TruncatedSeries series_prepois(std::size_t order);

// t/(1-t)^2: c_0 = 0, c_n = n.
TruncatedSeries series_dualprepois(std::size_t order);

// Residual of the Ginzburg-Kapranov functional equation
// f_DPP(-f_pP(-t)) - t; identically zero.
TruncatedSeries gk_check(std::size_t order);

// dim DualprePois(n) = n * n!, cross-checked against
// n! * [t^n] series_dualprepois.
Int operad_dim(std::size_t n);

}  // namespace permlei
