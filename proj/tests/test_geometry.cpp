#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "errors.hpp"
#include "geometry.hpp"
#include "linalg.hpp"
#include "random.hpp"

using namespace incid4;

namespace {

using Kind = IncidenceOutcome::Kind;

const Vec4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, e4{0, 0, 0, 1};
const Point4 origin{0, 0, 0, 0};

Vec4 rand_vec(SeededRng& rng, std::int64_t r) {
  return {rng.symmetric(r), rng.symmetric(r), rng.symmetric(r), rng.symmetric(r)};
}

Scalar rand_nonzero(SeededRng& rng) {
  Scalar s;
  while (s == 0) s = Scalar(rng.symmetric(6)) / static_cast<long>(1 + rng.below(4));
  return s;
}

Line4 rand_line(SeededRng& rng) {
  while (true) {
    Vec4 d = rand_vec(rng, 2);
    if (!is_zero(d)) return Line4(rand_vec(rng, 3), d);
  }
}

Flat2 rand_flat(SeededRng& rng) {
  while (true) {
    Vec4 u = rand_vec(rng, 2), v = rand_vec(rng, 2);
    if (rank_of({u, v}) == 2) return Flat2(rand_vec(rng, 3), u, v);
  }
}

// Independent oracle: ranks of the direction and augmented systems.
Kind rank_oracle(const Line4& l, const Flat2& f) {
  std::size_t dir_rank = rank_of({l.direction(), f.u(), f.v()});
  std::size_t aug_rank = rank_of({l.direction(), f.u(), f.v(), l.base() - f.base()});
  if (aug_rank > dir_rank) return Kind::Disjoint;
  return dir_rank == 3 ? Kind::Point : Kind::Contained;
}

}  // namespace

TEST_CASE("classify_line_flat2 examples") {
  Flat2 fl(origin, e2, e3);
  auto d = classify_line_flat2(Line4({0, 0, 0, 1}, e1), fl);
  CHECK(d.kind == Kind::Disjoint);
  auto p = classify_line_flat2(Line4(origin, e1), fl);
  REQUIRE(p.kind == Kind::Point);
  CHECK(*p.location == origin);
  auto c = classify_line_flat2(Line4(origin, {0, 1, 1, 0}), fl);
  CHECK(c.kind == Kind::Contained);

  CHECK(line_in_flat2(Line4(origin, {0, 1, 1, 0}), fl));
  CHECK_FALSE(line_in_flat2(Line4({0, 0, 0, 1}, e1), fl));
  CHECK_FALSE(line_in_flat2(Line4(origin, e1), fl));
}

TEST_CASE("flat2_in_hyperplane examples") {
  Flat2 f12(origin, e1, e2);
  CHECK(flat2_in_hyperplane(f12, Hyperplane3(e4, 0)));
  CHECK_FALSE(flat2_in_hyperplane(f12, Hyperplane3(e4, 1)));
  CHECK_FALSE(flat2_in_hyperplane(Flat2(origin, e1, e4), Hyperplane3(e4, 0)));
}

TEST_CASE("span_flat2_of_lines examples") {
  auto a = span_flat2_of_lines(Line4(origin, e1), Line4(origin, e2));
  REQUIRE(a.has_value());
  CHECK(same_flat(*a, Flat2(origin, e1, e2)));
  auto b = span_flat2_of_lines(Line4(origin, e1), Line4({0, 1, 0, 0}, e1));
  REQUIRE(b.has_value());
  CHECK(same_flat(*b, Flat2(origin, e1, e2)));
  CHECK_FALSE(span_flat2_of_lines(Line4(origin, e1), Line4({0, 0, 0, 1}, e2)).has_value());
  try {
    span_flat2_of_lines(Line4(origin, e1), Line4({5, 0, 0, 0}, {2, 0, 0, 0}));
    FAIL("expected IdenticalLines");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::IdenticalLines);
  }
}

TEST_CASE("invariant violations on construction") {
  CHECK_THROWS_AS(Line4(origin, {0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(Flat2(origin, e1, {2, 0, 0, 0}), Error);
  CHECK_THROWS_AS(Hyperplane3({0, 0, 0, 0}, 1), Error);
}

TEST_CASE("classification agrees with rank oracle and is reparametrization invariant") {
  SeededRng rng(2024);
  int kinds[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    Flat2 f = rand_flat(rng);
    Line4 l = rand_line(rng);
    // Bias some trials toward incidence and containment.
    if (trial % 3 == 1) l = Line4(f.at(rng.symmetric(3), rng.symmetric(3)), l.direction());
    if (trial % 3 == 2)
      l = Line4(f.at(rng.symmetric(3), rng.symmetric(3)), Scalar(rng.symmetric(3)) * f.u() + f.v());

    auto out = classify_line_flat2(l, f);
    CHECK(out.kind == rank_oracle(l, f));
    ++kinds[static_cast<int>(out.kind)];
    if (out.kind == Kind::Point) {
      CHECK(l.contains(*out.location));
      CHECK(f.contains(*out.location));
    }

    Scalar k = rand_nonzero(rng), t0 = rand_nonzero(rng);
    Line4 l2(l.at(t0), k * l.direction());
    Flat2 f2(f.at(rand_nonzero(rng), 1), f.u() + rand_nonzero(rng) * f.v(), rand_nonzero(rng) * f.v());
    auto out2 = classify_line_flat2(l2, f2);
    CHECK(out2.kind == out.kind);
    if (out.kind == Kind::Point) CHECK(*out2.location == *out.location);
  }
  CHECK(kinds[0] > 0);
  CHECK(kinds[1] > 0);
  CHECK(kinds[2] > 0);
}

TEST_CASE("canonical forms are idempotent and equality-complete") {
  SeededRng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Line4 l = rand_line(rng);
    Line4 c = l.canonical();
    CHECK(c.canonical() == c);
    Line4 moved(l.at(rand_nonzero(rng)), rand_nonzero(rng) * l.direction());
    CHECK(moved.canonical() == c);
    CHECK(same_line(moved, l));
    Line4 other(l.base() + e1, l.direction());
    CHECK(same_line(other, l) == l.contains(other.base()));

    Flat2 f = rand_flat(rng);
    Flat2 fc = f.canonical();
    CHECK(fc.canonical() == fc);
    Scalar a = rand_nonzero(rng), b = rand_nonzero(rng), cc = rand_nonzero(rng);
    Vec4 gu = a * f.u() + b * f.v(), gv = cc * f.v() + f.u();
    if (rank_of({gu, gv}) < 2) continue;
    Flat2 g(f.at(rand_nonzero(rng), rand_nonzero(rng)), gu, gv);
    CHECK(g.canonical() == fc);
  }
}

TEST_CASE("span_flat2_of_lines contains both lines") {
  SeededRng rng(7);
  int spans = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Line4 l1 = rand_line(rng);
    // Second line through a point of l1 (always coplanar) or random.
    Vec4 d2 = rand_vec(rng, 2);
    if (is_zero(d2)) continue;
    Line4 l2 = trial % 2 ? Line4(l1.at(rng.symmetric(3)), d2) : Line4(rand_vec(rng, 3), d2);
    if (same_line(l1, l2)) continue;
    auto f = span_flat2_of_lines(l1, l2);
    if (trial % 2) REQUIRE(f.has_value());
    if (f) {
      ++spans;
      CHECK(line_in_flat2(l1, *f));
      CHECK(line_in_flat2(l2, *f));
      CHECK(*f == f->canonical());
    } else {
      CHECK(rank_of({l1.direction(), d2, l2.base() - l1.base()}) == 3);
    }
  }
  CHECK(spans >= 90);
}

TEST_CASE("span_hyperplane_of_flats") {
  auto h = span_hyperplane_of_flats(Flat2(origin, e1, e2), Flat2({0, 0, 1, 0}, e1, e2));
  REQUIRE(h.has_value());
  CHECK(*h == Hyperplane3(e4, 0));
  CHECK_FALSE(span_hyperplane_of_flats(Flat2(origin, e1, e2), Flat2(origin, e3, e4)).has_value());
  auto m = span_hyperplane_of_flats(Flat2(origin, e1, e2), Flat2(origin, e1, e3));
  REQUIRE(m.has_value());
  CHECK(flat2_in_hyperplane(Flat2(origin, e1, e2), *m));
  CHECK(flat2_in_hyperplane(Flat2(origin, e1, e3), *m));
}
