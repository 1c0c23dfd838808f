#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bounds.hpp"
#include "counting.hpp"
#include "errors.hpp"

using namespace incid4;

namespace {

BoundParams params(long L, long S, long D, Scalar eps) {
  BoundParams p;
  p.L = L;
  p.S = S;
  p.D = D;
  p.epsilon = eps;
  return p;
}

const Scalar half(1, 2), tenth(1, 10);

void check_close(const Enclosure& e, long double expected, long double abs_tol) {
  CHECK(e.relative_width() <= 1e-9);
  CHECK(std::fabs(static_cast<long double>(e.mid()) - expected) <= abs_tol);
}

void check_exact(const Enclosure& e, const Scalar& expected) {
  CHECK(e.relative_width() <= 1e-9);
  CHECK(e.contains(expected));
}

}  // namespace

TEST_CASE("enclosure arithmetic") {
  Enclosure a(Scalar(1, 3));
  CHECK(a.exact().has_value());
  CHECK((a + a + a).exact() == Scalar(1));
  Enclosure r = pow(Enclosure(2), half);
  CHECK_FALSE(r.exact().has_value());
  CHECK(r.lower() <= std::sqrt(2.0));
  CHECK(r.upper() >= std::sqrt(2.0));
  CHECK(r.relative_width() < 1e-60);
  CHECK(pow(Enclosure(8), Scalar(2, 3)).exact() == Scalar(4));
  CHECK(pow(Enclosure(Scalar(9, 4)), Scalar(-1, 2)).exact() == Scalar(2, 3));
  Enclosure g = pow(Enclosure(10), Scalar(1, 7));
  CHECK(g.mid() == doctest::Approx(std::pow(10.0, 1.0 / 7.0)));
  CHECK_THROWS_AS(a / Enclosure(0), Error);
  CHECK(certainly_less(Enclosure(1), r));
  CHECK_FALSE(certainly_less(r, r));
  CHECK(Enclosure(12).to_string() == "12");
}

TEST_CASE("main bound") {
  auto a = eval_main_bound(params(10000, 1000, 2, tenth));
  long double oracle = std::pow(10.0L, 3.2L) * 1000 + 10000 * std::pow(10.0L, 1.8L);
  check_close(a.value, oracle, 1e-6L);
  CHECK(std::fabs(a.value.mid() - 2215850.0) <= 1.0);
  CHECK(a.hypothesis_satisfied);

  auto b = eval_main_bound(params(10000, 1000, 2, half));
  check_exact(b.value, 20000000);
  CHECK(b.value.exact() == Scalar(20000000));

  for (Scalar eps : {tenth, half, Scalar(3, 7)}) check_exact(eval_main_bound(params(1, 1, 2, eps)).value, 2);

  auto out = eval_main_bound(params(10000, 50, 2, tenth));
  CHECK_FALSE(out.hypothesis_satisfied);
  CHECK_FALSE(out.hypothesis_detail.empty());
  CHECK(out.hypothesis_detail.find("below") != std::string::npos);

  CHECK_THROWS_AS(eval_main_bound(params(0, 1, 2, tenth)), Error);
  CHECK_THROWS_AS(eval_main_bound(params(1, 1, 1, tenth)), Error);
  CHECK_THROWS_AS(eval_main_bound(params(1, 1, 2, 0)), Error);
}

TEST_CASE("regime") {
  CHECK(check_regime(10000, 1000).in_regime);
  CHECK(check_regime(10000, 1000, 10).in_regime);
  CHECK_FALSE(check_regime(10000, 999).in_regime);
  CHECK(check_regime(10000, 1000, 1).in_regime);
  CHECK_FALSE(check_regime(10000, 1001).in_regime);
  CHECK(check_regime(10000, 1000).detail.find("holds") != std::string::npos);
  CHECK_FALSE(check_regime(100, 50).in_regime);
  CHECK(check_regime(100, 10, 1).in_regime);
}

TEST_CASE("cell decomposition") {
  auto c = eval_cell_decomposition(params(10000, 1000, 16, half));
  check_exact(c.summed.value, 1250000);
  CHECK(c.below_main);

  auto d = eval_cell_decomposition(params(8000, 1000, 2, tenth));
  CHECK(d.lines_per_cell == 1000);
  CHECK(d.cell_count == 16);
  CHECK(d.planes_per_cell == 250);

  Enclosure prev = eval_cell_decomposition(params(10000, 1000, 2, tenth)).summed.value;
  for (long D : {3, 4, 8, 16}) {
    auto cd = eval_cell_decomposition(params(10000, 1000, D, tenth));
    CHECK(certainly_less(cd.summed.value, eval_main_bound(params(10000, 1000, D, tenth)).value));
    CHECK(certainly_less(cd.summed.value, prev));
    prev = cd.summed.value;
  }
}

TEST_CASE("G2 and G3") {
  auto g2 = eval_g2_bound(params(1000000, 1000, 2, half));
  check_exact(g2.count.value, 16);
  check_exact(g2.A, 125000);
  check_exact(g2.required, 4000);
  CHECK(g2.count.hypothesis_satisfied);

  auto g2f = eval_g2_bound(params(1000000, 1000, 4, tenth));
  CHECK_FALSE(g2f.count.hypothesis_satisfied);
  CHECK(g2f.A.mid() == doctest::Approx(std::pow(15625.0, 0.6)));
  CHECK(std::fabs(g2f.A.mid() - 328.0) < 1.0);
  CHECK(g2f.count.hypothesis_detail.find("<=") != std::string::npos);

  Enclosure prev = eval_g2_bound(params(1000, 100, 2, tenth)).count.value;
  for (long L : {10000, 100000, 1000000}) {
    Enclosure v = eval_g2_bound(params(L, 100, 2, tenth)).count.value;
    CHECK(certainly_le(prev, v));
    prev = v;
  }

  auto g3 = eval_g3_bound(params(1000, 10000, 2, half));
  check_exact(g3.count.value, 8);
  check_exact(g3.A, 2500);
  check_exact(g3.required, 400);
  CHECK(g3.count.hypothesis_satisfied);

  auto g3f = eval_g3_bound(params(1000, 100, 4, tenth));
  CHECK_FALSE(g3f.count.hypothesis_satisfied);
  CHECK(std::pow(100.0, 0.1) < 2 * std::pow(4.0, 2.2));

  check_exact(eval_g3_bound(params(1000, 77, 2, half)).count.value, 8);
}

TEST_CASE("two-surface cases") {
  ConstantsProfile c;
  auto t = eval_two_surface_cases(params(10000, 1000, 2, half), c);
  check_exact(t.case1.value, 32000);
  check_exact(t.case3.value, 320000);
  long double oracle = 1.5L * 8 * 10000 * std::sqrt(1000.0L);
  check_close(t.case2.value, oracle, 1e-6L);
  CHECK(std::fabs(t.case2.value.mid() - 3794733.0) <= 1.0);
  CHECK_FALSE(t.case2.hypothesis_satisfied);
  CHECK_FALSE(t.case2.hypothesis_detail.empty());

  auto s1 = eval_two_surface_cases(params(10000, 1, 2, tenth), c);
  check_close(s1.case2.value, 1.5L * std::pow(2.0L, 1.8L) * 10000, 1e-9L);

  ConstantsProfile c2;
  c2.C1 = 2;
  c2.C2 = 3;
  CHECK(c2.C3() == 9);
  c2.C1 = 0;
  CHECK_THROWS_AS(c2.validate(), Error);
}

TEST_CASE("three-surface cases") {
  ConstantsProfile c;
  auto t = eval_three_surface_cases(params(10000, 1000, 2, half), c);
  check_exact(t.case1.value, 160000);
  check_exact(t.case2.value, 90000000);
  // G3 = 8 at eps 1/2, so z(L, 8; L + 1, 2) = sqrt(L) * 7 * sqrt(L) + L.
  check_exact(t.kst_intermediate.value, 80000);

  auto one = eval_three_surface_cases(params(1, 1000, 2, half), c);
  check_exact(one.case2.value - Enclosure(2 * 4 * 1000), 1000);

  auto tiny = eval_three_surface_cases(params(100, 10000, 2, Scalar(1, 2)), c);
  CHECK(tiny.kst_intermediate.hypothesis_satisfied == eval_g3_bound(params(100, 10000, 2, half)).count.hypothesis_satisfied);
}

TEST_CASE("kst formula") {
  auto a = eval_kst(Scalar(4), Scalar(4), Scalar(2), 2);
  check_exact(a.value, 10);
  auto b = eval_kst(Scalar(2), Scalar(2), Scalar(2), 2);
  check_close(b.value, std::sqrt(2.0L) + 2, 1e-12L);
  CHECK(certainly_less(Enclosure(static_cast<long>(zarankiewicz_bruteforce(2, 2, 2, 2))), b.value));
  for (unsigned t = 1; t <= 4; ++t) check_exact(eval_kst(Scalar(7), Scalar(4), Scalar(1), t).value, 7 * (t - 1));
  CHECK_THROWS_AS(eval_kst(Scalar(4), Scalar(2), Scalar(2), 3), Error);
  try {
    eval_kst(Scalar(4), Scalar(2), Scalar(2), 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
  CHECK_THROWS_AS(eval_kst(Scalar(0), Scalar(2), Scalar(2), 1), Error);

  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      auto k = eval_kst(Scalar(static_cast<long>(m)), Scalar(static_cast<long>(n)), Scalar(2), 2);
      CHECK(certainly_le(Enclosure(static_cast<long>(zarankiewicz_bruteforce(m, n, 2, 2))), k.value));
    }
}

TEST_CASE("rich points") {
  auto a = eval_rich_points_bound(100, 2, 0, 4);
  check_exact(a.value, 1000);
  CHECK(a.hypothesis_satisfied);
  auto b = eval_rich_points_bound(100, 2, tenth, 2);
  check_close(b.value, 0.5L * std::pow(10.0L, 3.2L), 1e-9L);
  CHECK(std::fabs(b.value.mid() - 792.45) <= 0.01);
  auto c = eval_rich_points_bound(100, 4, tenth, 2);
  check_close(c.value * Enclosure(4), b.value.mid(), 1e-9L);
  auto d = eval_rich_points_bound(100, 21, tenth, 2);
  CHECK_FALSE(d.hypothesis_satisfied);
  CHECK_FALSE(d.hypothesis_detail.empty());
  CHECK_FALSE(eval_rich_points_bound(100, 1, tenth, 2).hypothesis_satisfied);
}

TEST_CASE("zero-set cases") {
  ConstantsProfile c;
  auto z = eval_zero_set_cases(params(100, 25, 2, half), c);
  check_exact(z.case1.value, 200);
  check_exact(z.case2.value, 50);
  check_exact(z.case3.value, 1250);
  check_exact(z.case4.value, 2500);
  check_exact(z.sum.value, 4000);
  CHECK_FALSE(z.case3.hypothesis_satisfied);
  CHECK(z.sum.hypothesis_satisfied == z.case3.hypothesis_satisfied);
  CHECK(eval_zero_set_cases(params(1000, 25, 2, half), c).case3.hypothesis_satisfied);

  auto empty = eval_zero_set_cases(params(100, 0, 2, half), c);
  check_exact(empty.sum.value, 200);

  ConstantsProfile c0;
  c0.C4 = 0;
  check_exact(eval_zero_set_cases(params(100, 25, 2, tenth), c0).case3.value, 0);
  auto close = eval_zero_set_cases(params(100, 50, 2, tenth), c);
  CHECK_FALSE(close.case3.hypothesis_satisfied);
}

TEST_CASE("total and dominance") {
  ConstantsProfile c;
  auto t = eval_total_and_dominance(params(10000, 1000, 2, half), c);
  // cells: D^-1 * 1e7 + D^-1 * 1e7; two-surface: 32000 + C3*8*1e4*sqrt(1000) + 320000;
  // three-surface: 160000 + 9e7; zero-set: 2e4 + 2e3 + 0.5*1e4*1e3 + 1e4*1e3.
  long double expected = 1e7L + 32000 + 1.5L * 8 * 10000 * std::sqrt(1000.0L) + 320000 + 160000 + 9e7L + 20000 +
                         2000 + 5e6L + 1e7L;
  check_close(t.total.value, expected, 1e-6L);
  check_close(t.ratio, expected / 2e7L, 1e-12L);
  CHECK(t.summands.size() == 7);
  CHECK(t.dominated);

  auto u = eval_total_and_dominance(params(1, 1, 2, tenth), c);
  CHECK(std::isfinite(u.ratio.mid()));
  CHECK(certainly_le(eval_main_bound(params(1, 1, 2, tenth)).value - Enclosure(1), u.total.value));

  auto tight = eval_total_and_dominance(params(10000, 1000, 2, half), c, Scalar(1, 100));
  CHECK_FALSE(tight.dominated);
  CHECK(tight.dominance_detail.find("three_surface_case2") != std::string::npos);
}

TEST_CASE("binomial truncation") {
  auto g2 = eval_g2_bound(params(1000000, 1000, 2, half));
  auto b = binomial_truncation_check(Scalar(1600), g2.count.value);
  CHECK(b.applicable);
  CHECK(b.within_one_percent);
  CHECK(b.relative_error.mid() > 0);
  auto far = binomial_truncation_check(Scalar(16), g2.count.value);
  CHECK_FALSE(far.applicable);
  for (long S : {1600, 5000, 100000}) CHECK(binomial_truncation_check(Scalar(S), Enclosure(16)).within_one_percent);
}

TEST_CASE("bound table") {
  std::string table = format_bound_table(params(10000, 1000, 2, half), ConstantsProfile{});
  CHECK(table.find("main 20000000") != std::string::npos);
  CHECK(table.find("zero_set_sum") != std::string::npos);
  CHECK(table == format_bound_table(params(10000, 1000, 2, half), ConstantsProfile{}));
}
