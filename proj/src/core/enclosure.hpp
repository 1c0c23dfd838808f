#pragma once

#include <optional>
#include <string>

#include <mpfr.h>

#include "rational.hpp"

namespace incid4 {

/// Closed interval [lo, hi] with MPFR endpoints rounded outward. Values
/// built from rationals by exact operations keep the rational alongside.
class Enclosure {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  Enclosure();
  explicit Enclosure(const Scalar& exact);
  Enclosure(long v) : Enclosure(Scalar(v)) {}
  Enclosure(const Enclosure& o);
  Enclosure(Enclosure&& o) noexcept;
  Enclosure& operator=(const Enclosure& o);
  Enclosure& operator=(Enclosure&& o) noexcept;
  ~Enclosure();

  const std::optional<Scalar>& exact() const { return exact_; }
  double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid() const;
  /// (hi - lo) / max(|mid|, 1)
  double relative_width() const;
  bool contains(const Scalar& x) const;

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Throws DomainError when b contains 0.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

  /// base^exponent for base >= 0. Exact when base is an exact rational,
  /// the exponent's denominator is at most 4 and the root is rational.
  friend Enclosure pow(const Enclosure& base, const Scalar& exponent);

  /// a.hi < b.lo
  friend bool certainly_less(const Enclosure& a, const Enclosure& b);
  /// a.hi <= b.lo
  friend bool certainly_le(const Enclosure& a, const Enclosure& b);

  /// Midpoint with `digits` significant digits; exact integers print whole.
  std::string to_string(int digits = 12) const;

 private:
  void set_exact(const Scalar& v);
  mpfr_t lo_;
  mpfr_t hi_;
  std::optional<Scalar> exact_;
};

}  // namespace incid4
