#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace copgeo {

/// Values of f(i/k, j/k) for 0 <= i, j <= k, stored with i (the x index) major.
struct SampledField {
  std::size_t k = 0;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * (k + 1) + j]; }
};

SampledField sample_field(const std::function<double(double, double)>& f, std::size_t k);

/// Total length of the level set {f = level} extracted by marching squares
/// (vertices with f >= level count as inside, edge crossings by linear
/// interpolation). Segments lying on the boundary of the unit square are not
/// counted. Ambiguous saddle cells are split according to `center`, evaluated
/// at the cell centre; when empty the mean of the four corners is used.
///
/// The field must be nondecreasing in each coordinate (true for every copula
/// CDF): this makes the cells crossing a level a contiguous run in every row.
double contour_length(const SampledField& field, double level,
                      const std::function<double(double, double)>& center = {});

}  // namespace copgeo
