#include "resultant.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "errors.hpp"
#include "roots.hpp"

namespace incid4 {

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = UniPoly{};
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

UniPoly principal_subresultant(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g, std::size_t j) {
  if (f.empty() || g.empty()) fail(ErrorCode::ZeroPolynomial, "subresultant of the zero polynomial");
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  if (j > m || j > n) fail(ErrorCode::InvalidArgument, "subresultant index exceeds a degree");
  const std::size_t size = m + n - 2 * j;
  std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size));
  // Column c holds the coefficient of y^(m+n-j-1-c).
  auto fill = [&](std::size_t row, const std::vector<UniPoly>& p, std::size_t shift) {
    for (std::size_t c = 0; c < size; ++c) {
      std::size_t power = m + n - j - 1 - c;
      if (power >= shift && power - shift < p.size()) mat[row][c] = p[power - shift];
    }
  };
  std::size_t row = 0;
  for (std::size_t i = 0; i < n - j; ++i) fill(row++, f, n - j - 1 - i);
  for (std::size_t i = 0; i < m - j; ++i) fill(row++, g, m - j - 1 - i);
  return determinant(std::move(mat));
}

UniPoly resultant_in_y(const BiPoly& p, const BiPoly& q) {
  return principal_subresultant(p.coefficients_in_y(), q.coefficients_in_y(), 0);
}

UniPoly resultant_in_x(const BiPoly& p, const BiPoly& q) {
  return principal_subresultant(p.coefficients_in_x(), q.coefficients_in_x(), 0);
}

namespace {

// 0, 1, -1, 1/2, -1/2, 2, -2, ... : distinct rationals by increasing height.
class ShearSequence {
 public:
  Scalar next() {
    while (pending_.empty()) refill();
    Scalar s = pending_.front();
    pending_.erase(pending_.begin());
    return s;
  }

 private:
  void refill() {
    ++height_;
    for (long q = 1; q <= height_; ++q)
      for (long p = 0; p <= height_; ++p) {
        if (std::max(p, q) != height_ || std::gcd(p, q) != 1) continue;
        pending_.emplace_back(mpz_class(p), mpz_class(q));
        if (p != 0) pending_.emplace_back(mpz_class(-p), mpz_class(q));
      }
  }

  long height_ = 0;
  std::vector<Scalar> pending_;
};

bool has_constant_leading_y(const std::vector<UniPoly>& cy, int total) {
  return static_cast<int>(cy.size()) - 1 == total && cy.back().degree() == 0;
}

}  // namespace

BezoutCheck bezout_point_check(const BiPoly& q1, const BiPoly& q2) {
  if (q1.is_zero() || q2.is_zero()) fail(ErrorCode::ZeroPolynomial, "Bezout check needs nonzero polynomials");
  BezoutCheck out;
  const int d1 = q1.degree();
  const int d2 = q2.degree();
  out.degree_product = static_cast<std::size_t>(d1) * static_cast<std::size_t>(d2);
  if (d1 == 0 || d2 == 0) {
    out.intersection_count = 0;
    return out;
  }

  // A common factor has positive degree in y or in x; the matching resultant
  // then vanishes identically.
  if (resultant_in_y(q1, q2).is_zero() || resultant_in_x(q1, q2).is_zero()) {
    out.common_factor = true;
    return out;
  }

  // Finitely many shears are bad: at most d1 + d2 drop a leading y
  // coefficient and at most C(B, 2) merge two of the B <= d1*d2 complex
  // intersection points in the projection. Beyond that budget the maximal
  // distinct-root count is attained.
  const std::size_t bound = out.degree_product;
  const std::size_t budget = bound * (bound - 1) / 2 + static_cast<std::size_t>(d1 + d2) + 1;
  ShearSequence shears;
  std::optional<UniPoly> best_resultant;
  Scalar best_shear;
  int best_distinct = -1;
  std::size_t tried = 0;
  while (tried < budget) {
    Scalar s = shears.next();
    BiPoly f = q1.sheared(s);
    BiPoly g = q2.sheared(s);
    auto fy = f.coefficients_in_y();
    auto gy = g.coefficients_in_y();
    if (!has_constant_leading_y(fy, d1) || !has_constant_leading_y(gy, d2)) continue;
    ++tried;
    UniPoly res = principal_subresultant(fy, gy, 0);
    UniPoly sqf = squarefree_part(res);
    // Injective projection certificate: every root of the resultant has a
    // common factor of degree exactly one in y.
    UniPoly psc1 = principal_subresultant(fy, gy, 1);
    if (gcd(sqf, psc1).degree() == 0) {
      best_resultant = res;
      best_shear = s;
      break;
    }
    if (sqf.degree() > best_distinct) {
      best_distinct = sqf.degree();
      best_resultant = res;
      best_shear = s;
    }
  }
  if (!best_resultant) fail(ErrorCode::Internal, "no admissible shear found");
  std::size_t count = best_resultant->degree() <= 0 ? 0 : sturm_root_count(*best_resultant);
  if (count > out.degree_product) fail(ErrorCode::Internal, "intersection count exceeds the degree product");
  out.intersection_count = count;
  out.shear = best_shear;
  return out;
}

}  // namespace incid4
