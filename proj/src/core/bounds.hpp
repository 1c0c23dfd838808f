#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enclosure.hpp"

namespace incid4 {

struct BoundParams {
  Scalar L = 1;
  Scalar S = 1;
  Scalar D = 2;
  Scalar epsilon = Scalar(1, 10);
  std::optional<unsigned> J;
  // S must lie in [factor * L^(1/2), L / factor] to count as in-regime.
  Scalar regime_factor = 10;

  /// Throws InvalidArgument. The zero-set cases accept S = 0.
  void validate(bool allow_empty_planes = false) const;
};

struct ConstantsProfile {
  Scalar C1 = 1;
  Scalar C2 = 1;
  Scalar C4 = 1;

  Scalar C3() const { return 3 * C1 * C2 / 2; }
  /// C1, C2 > 0 and C4 >= 0; throws InvalidArgument.
  void validate() const;
};

struct BoundResult {
  Enclosure value;
  bool hypothesis_satisfied = true;
  std::string hypothesis_detail;
};

struct RegimeCheck {
  bool in_regime = false;
  std::string detail;
};

/// factor * L^(1/2) <= S <= L / factor, decided exactly.
RegimeCheck check_regime(const Scalar& L, const Scalar& S, const Scalar& factor = 10);

/// L^(3/4 + eps/2) S + L S^(1/2 + eps); flag from check_regime.
BoundResult eval_main_bound(const BoundParams& p);

struct CellDecomposition {
  Scalar lines_per_cell;   // L / D^3
  Scalar planes_per_cell;  // S / D^2
  Scalar cell_count;       // D^4
  BoundResult summed;      // D^(-1/4 - 3eps/2) L^(3/4 + eps/2) S + D^(-2eps) L S^(1/2 + eps)
  bool below_main = false;
};

/// Throws InvariantViolation if the summed bound is not below the main bound.
CellDecomposition eval_cell_decomposition(const BoundParams& p);

struct PruningBound {
  BoundResult count;  // bound on the number of rich surfaces
  Enclosure A;        // richness threshold
  Enclosure required; // A must exceed this
};

/// A = (L/D^3)^(1/2+eps), needs A > 2 D L^(1/2); value 2 D^(3/2+3eps) L^(1/2-eps).
PruningBound eval_g2_bound(const BoundParams& p);
/// A = (S/D^2)^(1/2+eps), needs A > 2 D S^(1/2); value 2 D^(1+2eps) S^(1/2-eps).
PruningBound eval_g3_bound(const BoundParams& p);

struct TwoSurfaceCases {
  BoundResult case1;  // 2 D^(5/2+3eps) L^(1/2-eps) S
  BoundResult case2;  // C3 D^(3/2+3eps) L S^(1/2)
  BoundResult case3;  // 2 D^(5/2+3eps) L
};

TwoSurfaceCases eval_two_surface_cases(const BoundParams& p, const ConstantsProfile& c);

struct ThreeSurfaceCases {
  BoundResult case1;  // 2 D^(2+2eps) L S^(1/2-eps)
  BoundResult case2;  // 2 D^(1+2eps) L^(3/4+eps/2) S + L S^(1/2+eps)
  // z(L, G3; L^(1/2+eps) + 1, 2); flag false when G3 < 2 leaves it undefined.
  BoundResult kst_intermediate;
};

ThreeSurfaceCases eval_three_surface_cases(const BoundParams& p, const ConstantsProfile& c);

/// (s-1)^(1/t) (n-t+1) m^(1-1/t) + (t-1) m. Throws DomainError when t > n
/// and InvalidArgument for m, n, s, t < 1.
BoundResult eval_kst(const Scalar& m, const Scalar& n, const Scalar& s, unsigned t);
BoundResult eval_kst(const Enclosure& m, const Enclosure& n, const Enclosure& s, unsigned t);

/// c4 n^(3/2+eps) / r^2; flag records 2 <= r <= 2 n^(1/2).
BoundResult eval_rich_points_bound(const Scalar& n, const Scalar& r, const Scalar& epsilon, const Scalar& c4);

struct ZeroSetCases {
  BoundResult case1;  // D L
  BoundResult case2;  // D S
  BoundResult case3;  // (3/8 + eps/4) C4 L^(1/2+eps) S
  BoundResult case4;  // L S^(1/2+eps)
  BoundResult sum;
};

ZeroSetCases eval_zero_set_cases(const BoundParams& p, const ConstantsProfile& c);

struct TotalBound {
  BoundResult main;
  BoundResult total;
  Enclosure ratio;  // total / main
  std::vector<std::pair<std::string, Enclosure>> summands;
  Scalar c_dom;
  bool dominated = false;  // every summand <= c_dom * main
  std::string dominance_detail;
};

TotalBound eval_total_and_dominance(const BoundParams& p, const ConstantsProfile& c, const Scalar& c_dom = 1000);

struct BinomialTruncation {
  Enclosure exact;      // (S + G2)^(3/2)
  Enclosure truncated;  // S^(3/2) + (3/2) S^(1/2) G2
  Enclosure relative_error;
  bool applicable = false;  // S >= 100 G2
  bool within_one_percent = false;
};

BinomialTruncation binomial_truncation_check(const Scalar& S, const Enclosure& G2);

/// One labelled value per line, in a fixed order.
std::string format_bound_table(const BoundParams& p, const ConstantsProfile& c, const Scalar& c_dom = 1000);

}  // namespace incid4
