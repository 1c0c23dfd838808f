#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace incid4 {

/// Determinant of a square matrix over Q[x] (fraction-free Bareiss).
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

/// j-th principal subresultant coefficient of f, g viewed as polynomials in
/// y over Q[x]; index 0 is the resultant. Inputs are coefficient lists
/// (lowest power of y first) with nonzero leading entries.
UniPoly principal_subresultant(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g, std::size_t j);

/// Res_y(p, q) as a polynomial in x.
UniPoly resultant_in_y(const BiPoly& p, const BiPoly& q);
/// Res_x(p, q) as a polynomial in y.
UniPoly resultant_in_x(const BiPoly& p, const BiPoly& q);

struct BezoutCheck {
  bool common_factor = false;
  /// Distinct real common zeros; empty when common_factor is set.
  std::optional<std::size_t> intersection_count;
  /// deg q1 * deg q2
  std::size_t degree_product = 0;
  /// Shear x -> x - s*y under which the projection onto x was certified injective.
  Scalar shear;
};

/// Decides whether q1, q2 share a nonconstant factor and, if not, counts
/// their real intersection points exactly. Throws ZeroPolynomial.
BezoutCheck bezout_point_check(const BiPoly& q1, const BiPoly& q2);

}  // namespace incid4
