#include "geometry.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace incid4 {

namespace {

std::size_t first_nonzero(const Vec4& v) {
  for (std::size_t i = 0; i < 4; ++i)
    if (v[i] != 0) return i;
  return 4;
}

}  // namespace

// ------------------------------------------------------------------ Line4

Line4::Line4(Point4 base, Vec4 direction) : base_(std::move(base)), direction_(std::move(direction)) {
  if (is_zero(direction_)) fail(ErrorCode::InvariantViolation, "line direction must be nonzero");
}

Point4 Line4::at(const Scalar& t) const { return base_ + t * direction_; }

bool Line4::contains(const Point4& p) const { return rank_of({direction_, p - base_}) == 1; }

Line4 Line4::canonical() const {
  std::size_t pivot = first_nonzero(direction_);
  Vec4 d = (1 / direction_[pivot]) * direction_;
  Point4 b = base_ - base_[pivot] * d;
  return Line4(std::move(b), std::move(d));
}

// ------------------------------------------------------------------ Flat2

Flat2::Flat2(Point4 base, Vec4 u, Vec4 v) : base_(std::move(base)), u_(std::move(u)), v_(std::move(v)) {
  if (rank_of({u_, v_}) != 2) fail(ErrorCode::InvariantViolation, "2-flat spanning vectors must be independent");
}

Point4 Flat2::at(const Scalar& a, const Scalar& b) const { return base_ + a * u_ + b * v_; }

bool Flat2::spans(const Vec4& direction) const { return rank_of({u_, v_, direction}) == 2; }

bool Flat2::contains(const Point4& p) const { return spans(p - base_); }

Flat2 Flat2::canonical() const {
  RationalMatrix m = RationalMatrix::from_rows({u_, v_});
  auto pivots = m.reduce();
  Vec4 r1{m(0, 0), m(0, 1), m(0, 2), m(0, 3)};
  Vec4 r2{m(1, 0), m(1, 1), m(1, 2), m(1, 3)};
  Point4 b = base_ - base_[pivots[0]] * r1;
  b = b - b[pivots[1]] * r2;
  return Flat2(std::move(b), std::move(r1), std::move(r2));
}

// ------------------------------------------------------------ Hyperplane3

Hyperplane3::Hyperplane3(Vec4 normal, Scalar offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
  if (is_zero(normal_)) fail(ErrorCode::InvariantViolation, "hyperplane normal must be nonzero");
}

bool Hyperplane3::contains(const Point4& p) const { return dot(normal_, p) == offset_; }

Hyperplane3 Hyperplane3::canonical() const {
  Scalar inv = 1 / normal_[first_nonzero(normal_)];
  return Hyperplane3(inv * normal_, inv * offset_);
}

bool same_line(const Line4& a, const Line4& b) { return a.canonical() == b.canonical(); }
bool same_flat(const Flat2& a, const Flat2& b) { return a.canonical() == b.canonical(); }

const char* to_string(IncidenceOutcome::Kind kind) {
  switch (kind) {
    case IncidenceOutcome::Kind::Disjoint: return "Disjoint";
    case IncidenceOutcome::Kind::Point: return "Point";
    case IncidenceOutcome::Kind::Contained: return "Contained";
  }
  return "?";
}

IncidenceOutcome classify_line_flat2(const Line4& line, const Flat2& flat) {
  // Unknowns (t, a, b): t d - a u - b v = base_f - base_l.
  RationalMatrix m(4, 4);
  Vec4 rhs = flat.base() - line.base();
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, 0) = line.direction()[i];
    m(i, 1) = -flat.u()[i];
    m(i, 2) = -flat.v()[i];
    m(i, 3) = rhs[i];
  }
  auto pivots = m.reduce();
  if (!pivots.empty() && pivots.back() == 3) return {IncidenceOutcome::Kind::Disjoint, std::nullopt};
  if (pivots.size() == 3) {
    // Unique solution; t sits in the first row of the reduced system.
    return {IncidenceOutcome::Kind::Point, line.at(m(0, 3))};
  }
  return {IncidenceOutcome::Kind::Contained, std::nullopt};
}

bool line_in_flat2(const Line4& line, const Flat2& flat) {
  return classify_line_flat2(line, flat).kind == IncidenceOutcome::Kind::Contained;
}

bool flat2_in_hyperplane(const Flat2& flat, const Hyperplane3& h) {
  return dot(h.normal(), flat.base()) == h.offset() && dot(h.normal(), flat.u()) == 0 &&
         dot(h.normal(), flat.v()) == 0;
}

std::optional<Flat2> span_flat2_of_lines(const Line4& l1, const Line4& l2) {
  if (same_line(l1, l2)) fail(ErrorCode::IdenticalLines, "cannot span a 2-flat from two identical lines");
  Vec4 offset = l2.base() - l1.base();
  if (rank_of({l1.direction(), l2.direction()}) == 1) {
    // Distinct parallel lines always share a 2-flat.
    return Flat2(l1.base(), l1.direction(), offset).canonical();
  }
  if (rank_of({l1.direction(), l2.direction(), offset}) == 3) return std::nullopt;
  return Flat2(l1.base(), l1.direction(), l2.direction()).canonical();
}

std::optional<Hyperplane3> span_hyperplane_of_flats(const Flat2& f1, const Flat2& f2) {
  std::vector<Vec4> hull{f1.u(), f1.v(), f2.u(), f2.v(), f2.base() - f1.base()};
  RationalMatrix m = RationalMatrix::from_rows(hull);
  std::size_t r = m.rank();
  if (r == 2) fail(ErrorCode::InvalidArgument, "identical 2-flats have no unique hyperplane");
  if (r == 4) return std::nullopt;
  auto kernel = m.null_space();
  Vec4 normal{kernel[0][0], kernel[0][1], kernel[0][2], kernel[0][3]};
  return Hyperplane3(normal, dot(normal, f1.base())).canonical();
}

UniPoly restrict_to_line(const MultiPoly4& p, const Line4& line) {
  return restrict_to_line(p, line.base(), line.direction());
}

BiPoly restrict_to_flat2(const MultiPoly4& p, const Flat2& flat) {
  return restrict_to_plane(p, flat.base(), flat.u(), flat.v());
}

std::string to_string(const Line4& line) {
  return "line{p=" + to_string(line.base()) + ", d=" + to_string(line.direction()) + "}";
}

std::string to_string(const Flat2& flat) {
  return "flat{q=" + to_string(flat.base()) + ", u=" + to_string(flat.u()) + ", v=" + to_string(flat.v()) + "}";
}

std::string to_string(const Hyperplane3& h) {
  return "hyperplane{n=" + to_string(h.normal()) + ", c=" + to_string(h.offset()) + "}";
}

}  // namespace incid4
