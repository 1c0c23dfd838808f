#pragma once

#include <optional>
#include <string>

#include "polynomial.hpp"
#include "rational.hpp"

namespace incid4 {

/// Affine line base + t * direction in R^4.
class Line4 {
 public:
  /// Throws InvariantViolation for a zero direction.
  Line4(Point4 base, Vec4 direction);

  const Point4& base() const { return base_; }
  const Vec4& direction() const { return direction_; }
  Point4 at(const Scalar& t) const;
  bool contains(const Point4& p) const;

  /// Direction scaled so its first nonzero entry is 1; base moved along the
  /// line until its coordinate at that pivot is 0.
  Line4 canonical() const;

  friend bool operator==(const Line4& a, const Line4& b) {
    return a.base_ == b.base_ && a.direction_ == b.direction_;
  }
  friend bool operator<(const Line4& a, const Line4& b) {
    return a.direction_ != b.direction_ ? a.direction_ < b.direction_ : a.base_ < b.base_;
  }

 private:
  Point4 base_;
  Vec4 direction_;
};

/// Affine 2-flat base + a * u + b * v in R^4.
class Flat2 {
 public:
  /// Throws InvariantViolation when u, v are dependent.
  Flat2(Point4 base, Vec4 u, Vec4 v);

  const Point4& base() const { return base_; }
  const Vec4& u() const { return u_; }
  const Vec4& v() const { return v_; }
  Point4 at(const Scalar& a, const Scalar& b) const;
  bool contains(const Point4& p) const;
  bool spans(const Vec4& direction) const;

  /// Span in reduced row echelon form; base reduced to zero at both pivots.
  Flat2 canonical() const;

  friend bool operator==(const Flat2& a, const Flat2& b) {
    return a.base_ == b.base_ && a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator<(const Flat2& a, const Flat2& b) {
    if (a.u_ != b.u_) return a.u_ < b.u_;
    if (a.v_ != b.v_) return a.v_ < b.v_;
    return a.base_ < b.base_;
  }

 private:
  Point4 base_;
  Vec4 u_;
  Vec4 v_;
};

/// Affine hyperplane {x : normal . x = offset}.
class Hyperplane3 {
 public:
  /// Throws InvariantViolation for a zero normal.
  Hyperplane3(Vec4 normal, Scalar offset);

  const Vec4& normal() const { return normal_; }
  const Scalar& offset() const { return offset_; }
  bool contains(const Point4& p) const;

  /// Normal scaled so its first nonzero entry is 1.
  Hyperplane3 canonical() const;

  friend bool operator==(const Hyperplane3& a, const Hyperplane3& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }
  friend bool operator<(const Hyperplane3& a, const Hyperplane3& b) {
    return a.normal_ != b.normal_ ? a.normal_ < b.normal_ : a.offset_ < b.offset_;
  }

 private:
  Vec4 normal_;
  Scalar offset_;
};

bool same_line(const Line4& a, const Line4& b);
bool same_flat(const Flat2& a, const Flat2& b);

struct IncidenceOutcome {
  enum class Kind { Disjoint, Point, Contained };
  Kind kind = Kind::Disjoint;
  std::optional<Point4> location;  // set iff kind == Point
};

const char* to_string(IncidenceOutcome::Kind kind);

/// Solves base_l + t d = base_f + a u + b v exactly.
IncidenceOutcome classify_line_flat2(const Line4& line, const Flat2& flat);
bool line_in_flat2(const Line4& line, const Flat2& flat);
bool flat2_in_hyperplane(const Flat2& flat, const Hyperplane3& h);

/// Canonical 2-flat holding both lines (intersecting or parallel), or
/// nullopt when they are skew. Throws IdenticalLines.
std::optional<Flat2> span_flat2_of_lines(const Line4& l1, const Line4& l2);

/// Canonical hyperplane holding both flats when their affine hull is
/// 3-dimensional, nullopt when it is all of R^4. Throws InvalidArgument for
/// identical flats.
std::optional<Hyperplane3> span_hyperplane_of_flats(const Flat2& f1, const Flat2& f2);

UniPoly restrict_to_line(const MultiPoly4& p, const Line4& line);
BiPoly restrict_to_flat2(const MultiPoly4& p, const Flat2& flat);

std::string to_string(const Line4& line);
std::string to_string(const Flat2& flat);
std::string to_string(const Hyperplane3& h);

}  // namespace incid4
