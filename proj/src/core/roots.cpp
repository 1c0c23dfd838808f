#include "roots.hpp"

#include <algorithm>

#include "errors.hpp"

namespace incid4 {

namespace {

int sign_at_infinity(const UniPoly& p, bool positive) {
  int s = sgn(p.leading());
  if (!positive && (p.degree() % 2 != 0)) s = -s;
  return s;
}

std::size_t variations(const std::vector<UniPoly>& seq, const std::optional<Scalar>& at, bool positive_inf) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = at ? p.sign_at(*at) : sign_at_infinity(p, positive_inf);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t open_count(const std::vector<UniPoly>& seq, const Scalar& lo, const Scalar& hi) {
  std::size_t vl = variations(seq, lo, false);
  std::size_t vh = variations(seq, hi, true);
  return vl > vh ? vl - vh : 0;
}

// A point strictly inside (lo, hi) that is not a root of f.
Scalar split_point(const UniPoly& f, const Scalar& lo, const Scalar& hi) {
  Scalar c = (lo + hi) / 2;
  while (f.sign_at(c) == 0) c = (lo + c) / 2;
  return c;
}

void isolate(const UniPoly& f, const std::vector<UniPoly>& seq, const Scalar& lo, const Scalar& hi, std::size_t count,
             std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Scalar mid = split_point(f, lo, hi);
  std::size_t left = open_count(seq, lo, mid);
  isolate(f, seq, lo, mid, left, out);
  isolate(f, seq, mid, hi, count - left, out);
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  std::vector<UniPoly> seq;
  seq.push_back(f.primitive());
  UniPoly d = f.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.primitive());
  while (true) {
    UniPoly r = divrem(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back((-r).primitive());
  }
  return seq;
}

std::size_t sturm_root_count(const UniPoly& f, const RootInterval& interval) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return 0;
  auto seq = sturm_sequence(squarefree_part(f));
  std::size_t vl = variations(seq, interval.lo, false);
  std::size_t vh = variations(seq, interval.hi, true);
  return vl > vh ? vl - vh : 0;
}

Scalar root_magnitude_bound(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
  Scalar m = 0;
  const Scalar& lead = f.leading();
  for (int i = 0; i < f.degree(); ++i) {
    Scalar r = abs(f.coefficients()[static_cast<std::size_t>(i)] / lead);
    if (r > m) m = r;
  }
  return m + 2;
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root isolation of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (f.degree() == 0) return out;
  UniPoly g = squarefree_part(f);
  auto seq = sturm_sequence(g);
  Scalar b = root_magnitude_bound(g);
  isolate(g, seq, -b, b, open_count(seq, -b, b), out);
  return out;
}

}  // namespace incid4

namespace incid4 {

namespace {

// Splits squarefree polynomials into pairwise coprime ones with the same
// union of roots.
std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& polys) {
  std::vector<UniPoly> basis;
  for (const auto& f : polys) {
    if (f.degree() < 1) continue;
    UniPoly p = squarefree_part(f);
    std::vector<UniPoly> split;
    for (auto& b : basis) {
      if (p.degree() < 1) break;
      UniPoly g = gcd(p, b);
      if (g.degree() < 1) continue;
      UniPoly rest = exact_div(b, g);
      p = exact_div(p, g);
      b = g.primitive();
      if (rest.degree() >= 1) split.push_back(rest.primitive());
    }
    for (auto& r : split) basis.push_back(std::move(r));
    if (p.degree() >= 1) basis.push_back(p.primitive());
  }
  return basis;
}

struct Tracked {
  RootBracket bracket;
  const UniPoly* poly;
  int sign_lo;
};

void refine(Tracked& t) {
  if (t.bracket.lo == t.bracket.hi) return;
  Scalar mid = (t.bracket.lo + t.bracket.hi) / 2;
  int s = t.poly->sign_at(mid);
  if (s == 0) {
    t.bracket.lo = mid;
    t.bracket.hi = mid;
  } else if (s == t.sign_lo) {
    t.bracket.lo = mid;
  } else {
    t.bracket.hi = mid;
  }
}

bool overlap(const RootBracket& a, const RootBracket& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace

std::vector<RootBracket> merged_real_roots(const std::vector<UniPoly>& polys) {
  for (const auto& f : polys)
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root isolation of the zero polynomial");
  const auto basis = coprime_basis(polys);
  std::vector<Tracked> roots;
  for (const auto& b : basis)
    for (const auto& iv : isolate_real_roots(b)) roots.push_back({{iv.lo, iv.hi}, &b, b.sign_at(iv.lo)});

  bool clash = true;
  while (clash) {
    clash = false;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (overlap(roots[i].bracket, roots[j].bracket)) {
          clash = true;
          refine(roots[i]);
          refine(roots[j]);
        }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Tracked& a, const Tracked& b) { return a.bracket.lo < b.bracket.lo; });
  std::vector<RootBracket> out;
  for (auto& r : roots) out.push_back(std::move(r.bracket));
  return out;
}

}  // namespace incid4
