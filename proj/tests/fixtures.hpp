#pragma once

#include <cstdint>
#include <vector>

#include "partition.hpp"
#include "random.hpp"

namespace incid4::testing {

inline MultiPoly4 x1_minus(const Scalar& c) { return MultiPoly4::variable(0) - MultiPoly4::constant(c); }

// Three rounds cutting the points x1 = 1..8 into singletons: roots at the
// midpoints 9/2; 5/2, 13/2; 3/2, 7/2, 11/2, 15/2. Total degree 7.
inline PartitionPolynomial collinear_d7() {
  PartitionPolynomial p;
  p.factors.push_back(x1_minus(Scalar(9, 2)));
  p.factors.push_back(x1_minus(Scalar(5, 2)) * x1_minus(Scalar(13, 2)));
  p.factors.push_back(x1_minus(Scalar(3, 2)) * x1_minus(Scalar(7, 2)) * x1_minus(Scalar(11, 2)) *
                      x1_minus(Scalar(15, 2)));
  return p;
}

inline std::vector<Point4> collinear_points() {
  std::vector<Point4> pts;
  for (long i = 1; i <= 8; ++i) pts.push_back({i, 0, 0, 0});
  return pts;
}

inline std::vector<Point4> random_points(std::size_t n, std::uint64_t seed, std::int64_t range = 1000) {
  SeededRng rng(seed);
  std::vector<Point4> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({rng.symmetric(range), rng.symmetric(range), rng.symmetric(range), rng.symmetric(range)});
  return pts;
}

inline Line4 random_line(SeededRng& rng, std::int64_t range = 1000) {
  while (true) {
    Vec4 d{rng.symmetric(range), rng.symmetric(range), rng.symmetric(range), rng.symmetric(range)};
    if (is_zero(d)) continue;
    return Line4({rng.symmetric(range), rng.symmetric(range), rng.symmetric(range), rng.symmetric(range)}, d);
  }
}

}  // namespace incid4::testing
