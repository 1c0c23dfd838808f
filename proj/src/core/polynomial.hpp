#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace incid4 {

/// Univariate polynomial over Q, coefficients lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coefficients);
  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(std::size_t degree, const Scalar& c = 1);
  /// base + slope * t
  static UniPoly affine(const Scalar& base, const Scalar& slope);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar operator()(const Scalar& t) const;
  int sign_at(const Scalar& t) const;

  UniPoly derivative() const;
  UniPoly pow(unsigned e) const;
  /// Positive rational multiple with coprime integer coefficients. Preserves
  /// the sign of every evaluation.
  UniPoly primitive() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Q; throws ZeroPolynomial on a zero divisor.
DivRem divrem(const UniPoly& a, const UniPoly& b);
/// Exact division; throws Internal if the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// f / gcd(f, f'), same roots with multiplicity one.
UniPoly squarefree_part(const UniPoly& f);

using Exponent2 = std::pair<unsigned, unsigned>;

/// Bivariate polynomial over Q in (x, y); same canonical rules as MultiPoly4.
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly constant(const Scalar& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(unsigned ex, unsigned ey, const Scalar& c = 1);

  int degree() const { return degree_; }
  int degree_in_x() const;
  int degree_in_y() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent2, Scalar>& terms() const { return terms_; }

  Scalar operator()(const Scalar& x, const Scalar& y) const;

  /// The polynomial as sum_j c_j(x) y^j; index j holds c_j.
  std::vector<UniPoly> coefficients_in_y() const;
  std::vector<UniPoly> coefficients_in_x() const;
  /// p(x - shear * y, y)
  BiPoly sheared(const Scalar& shear) const;
  BiPoly pow(unsigned e) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Scalar& s, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponent2& e, const Scalar& c);
  void recompute_degree();
  std::map<Exponent2, Scalar> terms_;
  int degree_ = -1;
};

using Exponent4 = std::array<unsigned, 4>;

inline unsigned total_degree(const Exponent4& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Polynomial in x1..x4 over Q. Only nonzero coefficients are stored; the
/// zero polynomial has degree -1.
class MultiPoly4 {
 public:
  MultiPoly4() = default;
  static MultiPoly4 constant(const Scalar& c);
  /// x_{index+1}, index in 0..3
  static MultiPoly4 variable(unsigned index);
  static MultiPoly4 monomial(const Exponent4& e, const Scalar& c = 1);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent4, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Exponent4& e) const;

  Scalar operator()(const Point4& x) const;

  MultiPoly4 pow(unsigned e) const;
  /// Substitutes x_i -> scale_i * x_i + shift_i in every variable.
  MultiPoly4 affine_substitute(const Vec4& scale, const Vec4& shift) const;

  MultiPoly4 operator-() const;
  MultiPoly4& operator+=(const MultiPoly4& o);
  MultiPoly4& operator-=(const MultiPoly4& o);
  friend MultiPoly4 operator+(MultiPoly4 a, const MultiPoly4& b) { return a += b; }
  friend MultiPoly4 operator-(MultiPoly4 a, const MultiPoly4& b) { return a -= b; }
  friend MultiPoly4 operator*(const MultiPoly4& a, const MultiPoly4& b);
  friend MultiPoly4 operator*(const Scalar& s, const MultiPoly4& a);
  friend bool operator==(const MultiPoly4& a, const MultiPoly4& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "x1^2 + x4 - 1".
  std::string to_string() const;

 private:
  void add_term(const Exponent4& e, const Scalar& c);
  void recompute_degree();
  std::map<Exponent4, Scalar> terms_;
  int degree_ = -1;
};

/// f(t) = p(base + t * direction)
UniPoly restrict_to_line(const MultiPoly4& p, const Point4& base, const Vec4& direction);
/// g(a, b) = p(base + a * u + b * v)
BiPoly restrict_to_plane(const MultiPoly4& p, const Point4& base, const Vec4& u, const Vec4& v);

}  // namespace incid4
