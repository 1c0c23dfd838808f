#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "errors.hpp"
#include "fixtures.hpp"
#include "partition.hpp"

using namespace incid4;
using namespace incid4::testing;

namespace {

MultiPoly4 x(unsigned i) { return MultiPoly4::variable(i - 1); }

const Vec4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0};
const Point4 origin{0, 0, 0, 0};

// Independent post-check of the bisection contract.
bool bisects(const MultiPoly4& h, const std::vector<Point4>& set, const Scalar& delta) {
  std::size_t pos = 0, neg = 0;
  for (const auto& p : set) {
    int s = sign(h(p));
    pos += s > 0;
    neg += s < 0;
  }
  Scalar cap_q = Scalar(static_cast<unsigned long>(set.size())) * (1 + delta) / 2;
  mpz_class cap;
  mpz_cdiv_q(cap.get_mpz_t(), cap_q.get_num_mpz_t(), cap_q.get_den_mpz_t());
  return pos <= cap && neg <= cap;
}

std::size_t error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<std::size_t>(e.code());
  }
  return 0;
}

}  // namespace

TEST_CASE("veronese_lift") {
  CHECK(veronese_dimension(1) == 4);
  CHECK(veronese_dimension(2) == 14);
  CHECK(veronese_dimension(4) == 69);
  auto l1 = veronese_lift({3, -1, 2, 5}, 1);
  CHECK(l1 == std::vector<Scalar>{3, -1, 2, 5});

  auto mons = veronese_monomials(2);
  auto l2 = veronese_lift({1, 0, 0, 0}, 2);
  REQUIRE(l2.size() == 14);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    bool x1_only = mons[i][1] == 0 && mons[i][2] == 0 && mons[i][3] == 0;
    CHECK((l2[i] != 0) == x1_only);
  }
  auto l3 = veronese_lift({1, 2, 0, 0}, 2);
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (mons[i] == Exponent4{1, 1, 0, 0}) CHECK(l3[i] == 2);
  CHECK(min_lift_degree(4) == 1);
  CHECK(min_lift_degree(5) == 2);
  CHECK(min_lift_degree(70) == 5);
}

TEST_CASE("ham_sandwich_bisect") {
  std::vector<Point4> line8;
  for (long i = 1; i <= 8; ++i) line8.push_back({i, 0, 0, 0});
  auto h = ham_sandwich_bisect({line8}, 1, Scalar(0));
  CHECK_FALSE(h.is_zero());
  CHECK(h.degree() <= 1);
  CHECK(bisects(h, line8, 0));

  std::vector<Point4> two{{0, 0, 0, 0}, {2, 4, -2, 6}};
  auto h2 = ham_sandwich_bisect({two}, 1, Scalar(0));
  CHECK(bisects(h2, two, 0));

  std::vector<Point4> a, b;
  for (long i = 0; i < 4; ++i) {
    a.push_back({i, 0, 0, 0});
    b.push_back({0, i, 1, 0});
  }
  auto h3 = ham_sandwich_bisect({a, b}, 2, Scalar(0));
  CHECK(h3.degree() <= 2);
  CHECK(bisects(h3, a, 0));
  CHECK(bisects(h3, b, 0));

  std::vector<std::vector<Point4>> too_many(5, two);
  CHECK(error_code_of([&] { ham_sandwich_bisect(too_many, 1, Scalar(0)); }) ==
        static_cast<std::size_t>(ErrorCode::InvalidArgument));

  SUBCASE("random multi-set bisection at delta 0.1") {
    auto pts = random_points(120, 17);
    std::vector<std::vector<Point4>> sets(6);
    for (std::size_t i = 0; i < pts.size(); ++i) sets[i % 6].push_back(pts[i]);
    auto h4 = ham_sandwich_bisect(sets, 2, Scalar(1, 10));
    for (const auto& s : sets) CHECK(bisects(h4, s, Scalar(1, 10)));
  }
}

TEST_CASE("caps") {
  CHECK(bisection_cap(8, 0) == 4);
  CHECK(bisection_cap(9, 0) == 5);
  CHECK(bisection_cap(10, Scalar(1, 10)) == 6);
  CHECK(cumulative_cap(1024, 8, Scalar(1, 10)) == 9);
  CHECK(cumulative_cap(8, 3, 0) == 1);
}

TEST_CASE("partition params") {
  PartitionParams p;
  p.J = 3;
  p.lift_degree_schedule = {1, 2, 4};
  CHECK_NOTHROW(p.validate());
  p.lift_degree_schedule = {1, 1};
  CHECK_THROWS_AS(p.validate(), Error);
  p.J = 3;
  p.lift_degree_schedule = {1, 1, 1};
  CHECK_NOTHROW(p.validate());
  p.J = 4;
  p.lift_degree_schedule = {1, 1, 1, 1};
  CHECK_THROWS_AS(p.validate(), Error);
  p.J = 0;
  p.lift_degree_schedule.clear();
  p.delta = 1;
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("build_partition") {
  SUBCASE("J = 0") {
    PartitionParams p;
    auto part = build_partition(collinear_points(), p);
    CHECK(part.rounds() == 0);
    auto occ = occupancy(collinear_points(), part);
    CHECK(occ.cells.size() == 1);
    CHECK(occ.largest == 8);
  }
  SUBCASE("collinear points, linear/quadratic/quartic rounds, delta 0") {
    PartitionParams p;
    p.J = 3;
    p.lift_degree_schedule = {1, 2, 4};
    auto pts = collinear_points();
    auto part = build_partition(pts, p);
    CHECK(part.rounds() == 3);
    auto occ = occupancy(pts, part);
    CHECK(occ.largest <= 1);
    CHECK(occ.cells.size() + occ.zero_set == 8);
  }
  SUBCASE("explicit collinear construction") {
    auto part = collinear_d7();
    CHECK(part.degree() == 7);
    auto occ = occupancy(collinear_points(), part);
    CHECK(occ.cells.size() == 8);
    CHECK(occ.largest == 1);
    CHECK(occ.zero_set == 0);
  }
  SUBCASE("random points, per-round balance") {
    auto pts = random_points(256, 5);
    PartitionParams p;
    p.J = 5;
    p.delta = Scalar(1, 10);
    p.seed = 3;
    auto part = build_partition(pts, p);
    REQUIRE(part.rounds() == 5);
    for (unsigned j = 1; j <= 5; ++j) {
      PartitionPolynomial prefix;
      prefix.factors.assign(part.factors.begin(), part.factors.begin() + j);
      auto occ = occupancy(pts, prefix);
      CHECK(occ.largest <= cumulative_cap(pts.size(), j, p.delta));
    }
    CHECK(part.reference_degree() == doctest::Approx(std::pow(2.0, 5.0 / 4.0)));
    PartitionParams again = p;
    CHECK(dump_partition(build_partition(pts, again)) == dump_partition(part));
  }
}

TEST_CASE("cell_id") {
  PartitionPolynomial p1;
  p1.factors = {x(1)};
  CHECK(cell_id({2, 0, 0, 0}, p1) == SignVector{1});
  auto z = cell_id({0, 3, 0, 0}, p1);
  CHECK(z == SignVector{0});
  CHECK(on_zero_set(z));
  PartitionPolynomial p2;
  p2.factors = {x(1), x(2) - MultiPoly4::constant(1)};
  CHECK(cell_id({-1, 0, 0, 0}, p2) == SignVector{-1, -1});
  CHECK(to_string(SignVector{-1, -1}) == "--");
}

TEST_CASE("line_crossing_stats") {
  PartitionPolynomial p1;
  p1.factors = {x(1)};
  auto a = line_crossing_stats(Line4({1, 0, 0, 0}, e2), p1);
  CHECK(a.distinct_cells == 1);
  CHECK(a.zero_set_hits == 0);
  auto b = line_crossing_stats(Line4(origin, e1), p1);
  CHECK(b.distinct_cells == 2);
  CHECK(b.zero_set_hits == 1);

  auto c = line_crossing_stats(Line4(origin, e1), collinear_d7());
  CHECK(c.distinct_cells == 8);
  CHECK(c.zero_set_hits == 7);

  CHECK(error_code_of([&] { line_crossing_stats(Line4(origin, e2), p1); }) ==
        static_cast<std::size_t>(ErrorCode::LineInZeroSet));

  SUBCASE("interval signs match cell_id and monotone in factors") {
    auto pts = random_points(128, 8);
    PartitionParams p;
    p.J = 4;
    p.delta = Scalar(1, 10);
    auto part = build_partition(pts, p);
    SeededRng rng(21);
    for (int i = 0; i < 20; ++i) {
      Line4 ln = random_line(rng);
      auto st = line_crossing_stats(ln, part);
      CHECK(st.distinct_cells <= static_cast<std::size_t>(part.degree()) + 1);
      CHECK(st.distinct_cells <= st.zero_set_hits + 1);
      REQUIRE(st.interval_signs.size() == st.interval_samples.size());
      for (std::size_t k = 0; k < st.interval_samples.size(); ++k)
        CHECK(cell_id(ln.at(st.interval_samples[k]), part) == st.interval_signs[k]);
      std::size_t prev = 1;
      for (unsigned j = 1; j <= part.rounds(); ++j) {
        PartitionPolynomial prefix;
        prefix.factors.assign(part.factors.begin(), part.factors.begin() + j);
        auto sj = line_crossing_stats(ln, prefix);
        CHECK(sj.distinct_cells >= prev);
        prev = sj.distinct_cells;
      }
    }
  }
}

TEST_CASE("flat2_crossing_stats") {
  PartitionPolynomial p1;
  p1.factors = {x(1)};
  CHECK(error_code_of([&] { flat2_crossing_stats(Flat2(origin, e2, e3), p1); }) ==
        static_cast<std::size_t>(ErrorCode::FlatInZeroSet));
  auto a = flat2_crossing_stats(Flat2(origin, e1, e2), p1);
  CHECK(a.distinct_cells == 2);
  CHECK(a.bound == 3);
  PartitionPolynomial p2;
  p2.factors = {x(1), x(2)};
  auto b = flat2_crossing_stats(Flat2(origin, e1, e2), p2);
  CHECK(b.distinct_cells == 4);
  CHECK(b.bound == 7);
  CHECK(b.samples == 1024);
}

TEST_CASE("partition dump round trip") {
  auto part = collinear_d7();
  part.delta = Scalar(1, 10);
  std::string text = dump_partition(part);
  auto back = parse_partition(text);
  CHECK(back.factors == part.factors);
  CHECK(back.delta == part.delta);
  CHECK(dump_partition(back) == text);
  CHECK_THROWS_AS(parse_partition("partition\nJ 2\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("nonsense"), ParseError);
}
