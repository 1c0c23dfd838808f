#include "bounds.hpp"

#include <sstream>

#include "errors.hpp"

namespace incid4 {

namespace {

Enclosure E(const Scalar& x) { return Enclosure(x); }
Enclosure pw(const Scalar& base, const Scalar& e) { return pow(Enclosure(base), e); }

std::string str(const Enclosure& x) { return x.to_string(10); }
std::string str(const Scalar& x) { return to_string(x); }

// Certain strict comparison a > b; ties and unresolved overlaps count as no.
bool exceeds(const Enclosure& a, const Enclosure& b) { return certainly_less(b, a); }

BoundResult informational(Enclosure value, bool ok, std::string detail) {
  return {std::move(value), ok, std::move(detail)};
}

}  // namespace

void BoundParams::validate(bool allow_empty_planes) const {
  if (L < 1) fail(ErrorCode::InvalidArgument, "L must be at least 1");
  if (allow_empty_planes ? S < 0 : S < 1)
    fail(ErrorCode::InvalidArgument, allow_empty_planes ? "S must be nonnegative" : "S must be at least 1");
  if (D < 2) fail(ErrorCode::InvalidArgument, "D must be at least 2");
  if (epsilon <= 0) fail(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (regime_factor <= 0) fail(ErrorCode::InvalidArgument, "regime factor must be positive");
}

void ConstantsProfile::validate() const {
  if (C1 <= 0 || C2 <= 0) fail(ErrorCode::InvalidArgument, "C1 and C2 must be positive");
  if (C4 < 0) fail(ErrorCode::InvalidArgument, "C4 must be nonnegative");
}

RegimeCheck check_regime(const Scalar& L, const Scalar& S, const Scalar& factor) {
  // factor * sqrt(L) <= S  <=>  factor^2 L <= S^2 for S >= 0.
  bool lower = S >= 0 && factor * factor * L <= S * S;
  bool upper = factor * S <= L;
  RegimeCheck r;
  r.in_regime = lower && upper;
  std::ostringstream os;
  os << "regime " << str(factor) << "*L^(1/2) <= S <= L/" << str(factor) << ": ";
  if (r.in_regime) {
    os << "holds";
  } else {
    if (!lower) os << "S=" << str(S) << " below " << str(factor) << "*L^(1/2)=" << str(pw(factor * factor * L, Scalar(1, 2)));
    if (!lower && !upper) os << "; ";
    if (!upper) os << "S=" << str(S) << " above L/" << str(factor) << "=" << str(L / factor);
  }
  r.detail = os.str();
  return r;
}

BoundResult eval_main_bound(const BoundParams& p) {
  p.validate();
  const Scalar& eps = p.epsilon;
  Enclosure v = pw(p.L, Scalar(3, 4) + eps / 2) * E(p.S) + E(p.L) * pw(p.S, Scalar(1, 2) + eps);
  RegimeCheck rc = check_regime(p.L, p.S, p.regime_factor);
  return informational(std::move(v), rc.in_regime, rc.detail);
}

CellDecomposition eval_cell_decomposition(const BoundParams& p) {
  p.validate();
  const Scalar& eps = p.epsilon;
  CellDecomposition c;
  c.lines_per_cell = p.L / (p.D * p.D * p.D);
  c.planes_per_cell = p.S / (p.D * p.D);
  c.cell_count = p.D * p.D * p.D * p.D;
  Enclosure v = pw(p.D, -Scalar(1, 4) - 3 * eps / 2) * pw(p.L, Scalar(3, 4) + eps / 2) * E(p.S) +
                pw(p.D, -2 * eps) * E(p.L) * pw(p.S, Scalar(1, 2) + eps);
  BoundResult main = eval_main_bound(p);
  c.below_main = certainly_less(v, main.value);
  if (!c.below_main)
    fail(ErrorCode::InvariantViolation, "summed cell bound " + str(v) + " is not below the main bound " + str(main.value));
  c.summed = informational(std::move(v), main.hypothesis_satisfied, main.hypothesis_detail);
  return c;
}

PruningBound eval_g2_bound(const BoundParams& p) {
  p.validate();
  const Scalar& eps = p.epsilon;
  PruningBound g;
  g.A = pw(p.L / (p.D * p.D * p.D), Scalar(1, 2) + eps);
  g.required = E(2 * p.D) * pw(p.L, Scalar(1, 2));
  bool ok = exceeds(g.A, g.required);
  Enclosure v = E(2) * pw(p.D, Scalar(3, 2) + 3 * eps) * pw(p.L, Scalar(1, 2) - eps);
  g.count = informational(std::move(v), ok,
                          "A=(L/D^3)^(1/2+eps)=" + str(g.A) + (ok ? " > " : " <= ") + "2*D*L^(1/2)=" + str(g.required));
  return g;
}

PruningBound eval_g3_bound(const BoundParams& p) {
  p.validate();
  const Scalar& eps = p.epsilon;
  PruningBound g;
  g.A = pw(p.S / (p.D * p.D), Scalar(1, 2) + eps);
  g.required = E(2 * p.D) * pw(p.S, Scalar(1, 2));
  bool ok = exceeds(g.A, g.required);
  Enclosure v = E(2) * pw(p.D, 1 + 2 * eps) * pw(p.S, Scalar(1, 2) - eps);
  g.count = informational(std::move(v), ok,
                          "A=(S/D^2)^(1/2+eps)=" + str(g.A) + (ok ? " > " : " <= ") + "2*D*S^(1/2)=" + str(g.required));
  return g;
}

TwoSurfaceCases eval_two_surface_cases(const BoundParams& p, const ConstantsProfile& c) {
  c.validate();
  const Scalar& eps = p.epsilon;
  PruningBound g2 = eval_g2_bound(p);
  const std::string& g2_detail = g2.count.hypothesis_detail;
  TwoSurfaceCases out;
  Enclosure d52 = pw(p.D, Scalar(5, 2) + 3 * eps);
  out.case1 = informational(E(2) * d52 * pw(p.L, Scalar(1, 2) - eps) * E(p.S), g2.count.hypothesis_satisfied,
                            "G2 pruning: " + g2_detail);
  out.case3 = informational(E(2) * d52 * E(p.L), g2.count.hypothesis_satisfied, "G2 pruning: " + g2_detail);

  Enclosure v2 = E(c.C3()) * pw(p.D, Scalar(3, 2) + 3 * eps) * E(p.L) * pw(p.S, Scalar(1, 2));
  Enclosure g2_scaled = E(p.regime_factor) * g2.count.value;
  bool s_dominates = certainly_le(g2_scaled, E(p.S));
  Enclosure s2e = pw(p.S, 2 * eps);
  bool c1_gate = certainly_less(s2e, E(c.C1 * c.C1));
  std::string detail = "S=" + str(p.S) + (s_dominates ? " >= " : " < ") + str(p.regime_factor) + "*G2=" +
                       str(g2_scaled) + "; S^(2eps)=" + str(s2e) + (c1_gate ? " < " : " >= ") +
                       "C1^2=" + str(c.C1 * c.C1);
  out.case2 = informational(std::move(v2), s_dominates && c1_gate, detail);
  return out;
}

BoundResult eval_kst(const Enclosure& m, const Enclosure& n, const Enclosure& s, unsigned t) {
  if (t < 1) fail(ErrorCode::InvalidArgument, "t must be at least 1");
  const Enclosure one(1);
  if (!certainly_le(one, m) || !certainly_le(one, n) || !certainly_le(one, s))
    fail(ErrorCode::InvalidArgument, "KST needs m, n, s >= 1");
  const Enclosure tt(static_cast<long>(t));
  if (!certainly_le(tt, n)) fail(ErrorCode::DomainError, "KST needs t <= n, got t=" + std::to_string(t) + " n=" + str(n));
  Scalar inv_t(1, static_cast<long>(t));
  Enclosure v = pow(s - one, inv_t) * (n - tt + one) * pow(m, 1 - inv_t) + (tt - one) * m;
  return informational(std::move(v), true, "unconditional");
}

BoundResult eval_kst(const Scalar& m, const Scalar& n, const Scalar& s, unsigned t) {
  return eval_kst(E(m), E(n), E(s), t);
}

ThreeSurfaceCases eval_three_surface_cases(const BoundParams& p, const ConstantsProfile& c) {
  c.validate();
  const Scalar& eps = p.epsilon;
  PruningBound g3 = eval_g3_bound(p);
  const bool ok = g3.count.hypothesis_satisfied;
  const std::string detail = "G3 pruning: " + g3.count.hypothesis_detail;
  ThreeSurfaceCases out;
  out.case1 = informational(E(2) * pw(p.D, 2 + 2 * eps) * E(p.L) * pw(p.S, Scalar(1, 2) - eps), ok, detail);
  out.case2 = informational(E(2) * pw(p.D, 1 + 2 * eps) * pw(p.L, Scalar(3, 4) + eps / 2) * E(p.S) +
                                E(p.L) * pw(p.S, Scalar(1, 2) + eps),
                            ok, detail);
  const Enclosure& G3 = g3.count.value;
  if (certainly_le(Enclosure(2), G3)) {
    out.kst_intermediate = eval_kst(E(p.L), G3, pw(p.L, Scalar(1, 2) + eps) + Enclosure(1), 2);
    out.kst_intermediate.hypothesis_satisfied = ok;
    out.kst_intermediate.hypothesis_detail = detail;
  } else {
    out.kst_intermediate =
        informational(Enclosure(0), false, "unavailable: G3=" + str(G3) + " < t=2, z(L, G3; L^(1/2+eps)+1, 2) undefined");
  }
  return out;
}

BoundResult eval_rich_points_bound(const Scalar& n, const Scalar& r, const Scalar& epsilon, const Scalar& c4) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  if (r <= 0) fail(ErrorCode::InvalidArgument, "r must be positive");
  if (epsilon < 0) fail(ErrorCode::InvalidArgument, "epsilon must be nonnegative");
  if (c4 < 0) fail(ErrorCode::InvalidArgument, "C4 must be nonnegative");
  Enclosure v = E(c4) * pw(n, Scalar(3, 2) + epsilon) / E(r * r);
  bool ok = r >= 2 && r * r <= 4 * n;
  return informational(std::move(v), ok,
                       ok ? "2 <= r <= 2*n^(1/2) holds" : "r=" + str(r) + " outside [2, 2*n^(1/2)]");
}

ZeroSetCases eval_zero_set_cases(const BoundParams& p, const ConstantsProfile& c) {
  p.validate(true);
  c.validate();
  const Scalar& eps = p.epsilon;
  ZeroSetCases z;
  z.case1 = informational(E(p.D * p.L), true, "unconditional");
  z.case2 = informational(E(p.D * p.S), true, "unconditional");
  bool l_dominates = p.regime_factor * p.S <= p.L;
  z.case3 = informational(E((Scalar(3, 8) + eps / 4) * c.C4) * pw(p.L, Scalar(1, 2) + eps) * E(p.S), l_dominates,
                          "L=" + str(p.L) + (l_dominates ? " >= " : " < ") + str(p.regime_factor) + "*S=" +
                              str(p.regime_factor * p.S));
  z.case4 = informational(E(p.L) * pw(p.S, Scalar(1, 2) + eps), true, "unconditional");
  z.sum = informational(z.case1.value + z.case2.value + z.case3.value + z.case4.value, l_dominates,
                        z.case3.hypothesis_detail);
  return z;
}

TotalBound eval_total_and_dominance(const BoundParams& p, const ConstantsProfile& c, const Scalar& c_dom) {
  if (c_dom <= 0) fail(ErrorCode::InvalidArgument, "dominance constant must be positive");
  TotalBound t;
  t.main = eval_main_bound(p);
  CellDecomposition cells = eval_cell_decomposition(p);
  TwoSurfaceCases two = eval_two_surface_cases(p, c);
  ThreeSurfaceCases three = eval_three_surface_cases(p, c);
  ZeroSetCases zero = eval_zero_set_cases(p, c);
  t.summands = {{"cells", cells.summed.value},
                {"two_surface_case1", two.case1.value},
                {"two_surface_case2", two.case2.value},
                {"two_surface_case3", two.case3.value},
                {"three_surface_case1", three.case1.value},
                {"three_surface_case2", three.case2.value},
                {"zero_set", zero.sum.value}};
  Enclosure total;
  for (const auto& [name, v] : t.summands) total = total + v;
  t.ratio = total / t.main.value;

  std::vector<std::string> failing;
  if (!t.main.hypothesis_satisfied) failing.push_back("regime");
  if (!eval_g2_bound(p).count.hypothesis_satisfied) failing.push_back("G2");
  if (!eval_g3_bound(p).count.hypothesis_satisfied) failing.push_back("G3");
  std::string detail = failing.empty() ? "regime, G2 and G3 hypotheses hold" : "failing:";
  for (const auto& f : failing) detail += " " + f;
  t.total = informational(std::move(total), failing.empty(), detail);

  t.c_dom = c_dom;
  Enclosure cap = E(c_dom) * t.main.value;
  t.dominated = true;
  std::string over;
  for (const auto& [name, v] : t.summands)
    if (!certainly_le(v, cap)) {
      t.dominated = false;
      over += " " + name;
    }
  t.dominance_detail = t.dominated ? "every summand <= " + str(c_dom) + " * main" : "above " + str(c_dom) + " * main:" + over;
  return t;
}

BinomialTruncation binomial_truncation_check(const Scalar& S, const Enclosure& G2) {
  if (S <= 0) fail(ErrorCode::InvalidArgument, "S must be positive");
  BinomialTruncation b;
  b.exact = pow(E(S) + G2, Scalar(3, 2));
  b.truncated = pw(S, Scalar(3, 2)) + E(Scalar(3, 2)) * pw(S, Scalar(1, 2)) * G2;
  b.relative_error = (b.exact - b.truncated) / b.exact;
  b.applicable = certainly_le(E(100) * G2, E(S));
  b.within_one_percent = certainly_less(b.relative_error, E(Scalar(1, 100))) &&
                         certainly_less(E(Scalar(-1, 100)), b.relative_error);
  return b;
}

std::string format_bound_table(const BoundParams& p, const ConstantsProfile& c, const Scalar& c_dom) {
  std::ostringstream os;
  auto row = [&](const std::string& name, const BoundResult& r) {
    os << name << " " << r.value.to_string() << " hypothesis=" << (r.hypothesis_satisfied ? "true" : "false") << " ("
       << r.hypothesis_detail << ")\n";
  };
  os << "params L=" << str(p.L) << " S=" << str(p.S) << " D=" << str(p.D) << " epsilon=" << str(p.epsilon)
     << " C1=" << str(c.C1) << " C2=" << str(c.C2) << " C3=" << str(c.C3()) << " C4=" << str(c.C4) << "\n";
  row("main", eval_main_bound(p));
  CellDecomposition cells = eval_cell_decomposition(p);
  os << "cells L_i=" << str(cells.lines_per_cell) << " S_i=" << str(cells.planes_per_cell)
     << " count=" << str(cells.cell_count) << "\n";
  row("cell_sum", cells.summed);
  PruningBound g2 = eval_g2_bound(p), g3 = eval_g3_bound(p);
  row("G2", g2.count);
  row("G3", g3.count);
  TwoSurfaceCases two = eval_two_surface_cases(p, c);
  row("two_surface_case1", two.case1);
  row("two_surface_case2", two.case2);
  row("two_surface_case3", two.case3);
  ThreeSurfaceCases three = eval_three_surface_cases(p, c);
  row("three_surface_case1", three.case1);
  row("three_surface_case2", three.case2);
  row("kst_intermediate", three.kst_intermediate);
  ZeroSetCases zero = eval_zero_set_cases(p, c);
  row("zero_set_case1", zero.case1);
  row("zero_set_case2", zero.case2);
  row("zero_set_case3", zero.case3);
  row("zero_set_case4", zero.case4);
  row("zero_set_sum", zero.sum);
  TotalBound t = eval_total_and_dominance(p, c, c_dom);
  row("total", t.total);
  os << "ratio " << t.ratio.to_string() << "\n";
  os << "dominance " << (t.dominated ? "true" : "false") << " (" << t.dominance_detail << ")\n";
  return os.str();
}

}  // namespace incid4
