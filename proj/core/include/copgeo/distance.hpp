#pragma once

#include "copgeo/grid_copula.hpp"
#include "copgeo/interval_exchange.hpp"

namespace copgeo {

/// Uniform distance sup |A - B| between two checkerboard CDFs. Both are
/// bilinear on every cell of the joint lattice, so the sup is attained at
/// joint lattice points, which is where it is evaluated.
double d_infinity(const GridCopula& a, const GridCopula& b);

/// Uniform distance between two shuffle CDFs. On each cell of the joint
/// breakpoint lattice both CDFs are piecewise linear with at most one
/// diagonal crease each, so the sup is attained at a cell corner, at a
/// crease/edge crossing, or at the crossing of the two creases; all of these
/// are evaluated. Throws CapExceeded if the joint lattice has more than
/// kGridCap^2 cells.
double d_infinity(const IntervalExchange& a, const IntervalExchange& b);

}  // namespace copgeo
