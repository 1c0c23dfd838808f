#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace incid4 {

/// Half-open interval (lo, hi]; an empty bound means -inf / +inf.
struct RootInterval {
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
};

/// Signed remainder sequence of f and f', each member scaled to a primitive
/// integer polynomial (positive scaling keeps every sign).
std::vector<UniPoly> sturm_sequence(const UniPoly& f);

/// Number of distinct real roots of f in (lo, hi]. Throws ZeroPolynomial
/// for f = 0.
std::size_t sturm_root_count(const UniPoly& f, const RootInterval& interval = {});

/// Open interval (lo, hi) holding exactly one root; neither endpoint is a
/// root of the isolated polynomial.
struct IsolatingInterval {
  Scalar lo;
  Scalar hi;
};

/// Disjoint isolating intervals for the distinct real roots of f, in
/// increasing order (hi of one interval <= lo of the next).
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& f);

/// Strict bound B with every real root of f in (-B, B).
Scalar root_magnitude_bound(const UniPoly& f);

}  // namespace incid4

namespace incid4 {

/// Closed interval [lo, hi] holding exactly one root; lo == hi when the root
/// is known exactly.
struct RootBracket {
  Scalar lo;
  Scalar hi;
};

/// The distinct real roots of the product of `polys` (zero polynomials are
/// rejected, constants ignored), as pairwise disjoint brackets in increasing
/// order. Works on a coprime basis, so the product is never formed.
std::vector<RootBracket> merged_real_roots(const std::vector<UniPoly>& polys);

}  // namespace incid4
