#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "polynomial.hpp"

namespace incid4 {

/// Monomials of total degree 1..k in graded order; m(k) = C(4+k, 4) - 1.
std::vector<Exponent4> veronese_monomials(unsigned k);
std::size_t veronese_dimension(unsigned k);
std::vector<Scalar> veronese_lift(const Point4& x, unsigned k);

/// Smallest k whose lift has at least `coordinates` monomials.
unsigned min_lift_degree(std::size_t coordinates);

struct BisectOptions {
  std::uint64_t seed = 0;
  unsigned restarts = 40;
  unsigned iterations = 300;
};

/// Nonzero h of degree <= k with at most ceil(|X|(1+delta)/2) points of
/// each set X strictly on either side. Verified exactly before returning.
/// Throws InvalidArgument when there are more sets than m(k), and
/// SearchBudgetExceeded when no certified bisector turns up.
MultiPoly4 ham_sandwich_bisect(const std::vector<std::vector<Point4>>& sets, unsigned k, const Scalar& delta,
                               const BisectOptions& options = {});

/// Same, with an explicit per-set cap on each open side.
MultiPoly4 ham_sandwich_bisect(const std::vector<std::vector<Point4>>& sets, unsigned k,
                               const std::vector<std::size_t>& caps, const BisectOptions& options = {});

/// ceil(n (1 + delta) / 2)
std::size_t bisection_cap(std::size_t n, const Scalar& delta);
/// ceil(n 2^-j (1 + delta)^j)
std::size_t cumulative_cap(std::size_t n, unsigned j, const Scalar& delta);

struct PartitionParams {
  unsigned J = 0;
  Scalar delta = 0;
  // Lift degree per round. Empty means adaptive: the smallest k whose lift
  // has at least 1.5x as many monomials as the round has nonempty cells.
  std::vector<unsigned> lift_degree_schedule;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument.
  void validate() const;
};

using SignVector = std::vector<int>;

std::string to_string(const SignVector& s);
bool on_zero_set(const SignVector& s);

struct PartitionPolynomial {
  std::vector<MultiPoly4> factors;
  Scalar delta = 0;

  std::size_t rounds() const { return factors.size(); }
  /// Sum of factor degrees.
  int degree() const;
  /// 2^(J/4), the degree promised for an optimal partition.
  double reference_degree() const;
};

SignVector cell_id(const Point4& x, const PartitionPolynomial& part);

/// Greedy round-by-round bisection of the points' current sign cells. Every
/// cell after round j is checked to hold at most cumulative_cap(N, j, delta)
/// points; a failed check throws InvariantViolation.
PartitionPolynomial build_partition(const std::vector<Point4>& points, const PartitionParams& params);

struct CellOccupancy {
  std::map<SignVector, std::size_t> cells;
  std::size_t zero_set = 0;
  std::size_t largest = 0;
};

CellOccupancy occupancy(const std::vector<Point4>& points, const PartitionPolynomial& part);

struct CrossingStats {
  std::size_t distinct_cells = 0;
  std::size_t zero_set_hits = 0;
  // Sign vector on each open parameter interval, left to right.
  std::vector<SignVector> interval_signs;
  // A parameter value inside each interval.
  std::vector<Scalar> interval_samples;
};

/// Exact; throws LineInZeroSet when a factor vanishes on the whole line and
/// InvariantViolation if the count ever exceeds D + 1.
CrossingStats line_crossing_stats(const Line4& line, const PartitionPolynomial& part);

struct FlatCrossingStats {
  std::size_t distinct_cells = 0;  // lower bound on cells entered
  std::size_t samples = 0;
  std::size_t samples_on_zero_set = 0;
  std::size_t bound = 0;  // D^2 + D + 1
};

/// Sign vectors at `sample_budget` deterministic lattice points of the flat.
/// Throws FlatInZeroSet, or InvariantViolation when the bound is exceeded.
FlatCrossingStats flat2_crossing_stats(const Flat2& flat, const PartitionPolynomial& part,
                                       std::size_t sample_budget = 1024);

std::string dump_partition(const PartitionPolynomial& part);
/// Inverse of dump_partition; throws ParseError.
PartitionPolynomial parse_partition(std::string_view text);

}  // namespace incid4
