#include "partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "errors.hpp"
#include "random.hpp"
#include "roots.hpp"

namespace incid4 {

std::vector<Exponent4> veronese_monomials(unsigned k) {
  std::vector<Exponent4> out;
  for (unsigned d = 1; d <= k; ++d)
    for (unsigned a = d + 1; a-- > 0;)
      for (unsigned b = d - a + 1; b-- > 0;)
        for (unsigned c = d - a - b + 1; c-- > 0;) out.push_back({a, b, c, d - a - b - c});
  return out;
}

std::size_t veronese_dimension(unsigned k) {
  // C(4 + k, 4) - 1
  std::size_t n = 1;
  for (unsigned i = 1; i <= 4; ++i) n = n * (k + i) / i;
  return n - 1;
}

std::vector<Scalar> veronese_lift(const Point4& x, unsigned k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "lift degree must be at least 1");
  std::array<std::vector<Scalar>, 4> pw;
  for (unsigned i = 0; i < 4; ++i) {
    pw[i].push_back(1);
    for (unsigned e = 1; e <= k; ++e) pw[i].push_back(pw[i].back() * x[i]);
  }
  std::vector<Scalar> out;
  for (const auto& e : veronese_monomials(k)) out.push_back(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]]);
  return out;
}

unsigned min_lift_degree(std::size_t coordinates) {
  unsigned k = 1;
  while (veronese_dimension(k) < coordinates) ++k;
  return k;
}

std::size_t bisection_cap(std::size_t n, const Scalar& delta) {
  Scalar v = Scalar(static_cast<unsigned long>(n)) * (1 + delta) / 2;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return c.get_ui();
}

std::size_t cumulative_cap(std::size_t n, unsigned j, const Scalar& delta) {
  Scalar v = Scalar(static_cast<unsigned long>(n));
  for (unsigned i = 0; i < j; ++i) v = v * (1 + delta) / 2;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return c.get_ui();
}

namespace {

// Multiplies by a positive rational so the coefficients are coprime integers.
MultiPoly4 primitive(const MultiPoly4& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  return Scalar(den, num) * p;
}

struct Frame {
  Vec4 center;
  Scalar scale;  // power of two
};

Frame normalizing_frame(const std::vector<std::vector<Point4>>& sets) {
  std::array<double, 4> mean{};
  std::size_t n = 0;
  for (const auto& s : sets)
    for (const auto& p : s) {
      for (int i = 0; i < 4; ++i) mean[i] += p[i].get_d();
      ++n;
    }
  Frame f;
  for (int i = 0; i < 4; ++i) {
    double m = n ? mean[i] / static_cast<double>(n) : 0.0;
    f.center[i] = Scalar(static_cast<long>(std::llround(m * 256.0)), 256);
  }
  double spread = 0;
  for (const auto& s : sets)
    for (const auto& p : s)
      for (int i = 0; i < 4; ++i) spread = std::max(spread, std::fabs(Scalar(p[i] - f.center[i]).get_d()));
  int e = 0;
  if (spread > 0) std::frexp(spread, &e);
  f.scale = e >= 0 ? Scalar(mpz_class(1) << e) : Scalar(1, mpz_class(1) << -e);
  return f;
}

bool float_balanced(const Eigen::VectorXd& v, std::size_t cap) {
  std::size_t pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] > 1e-12) ++pos;
    else if (v[i] < -1e-12) ++neg;
  }
  return pos <= cap && neg <= cap;
}

}  // namespace

MultiPoly4 ham_sandwich_bisect(const std::vector<std::vector<Point4>>& sets, unsigned k, const Scalar& delta,
                               const BisectOptions& options) {
  if (delta < 0 || delta >= 1) fail(ErrorCode::InvalidArgument, "delta must lie in [0, 1)");
  std::vector<std::size_t> caps;
  for (const auto& s : sets) caps.push_back(bisection_cap(s.size(), delta));
  return ham_sandwich_bisect(sets, k, caps, options);
}

MultiPoly4 ham_sandwich_bisect(const std::vector<std::vector<Point4>>& sets, unsigned k,
                               const std::vector<std::size_t>& caps, const BisectOptions& options) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "lift degree must be at least 1");
  if (caps.size() != sets.size()) fail(ErrorCode::InvalidArgument, "one cap per set required");
  const std::size_t m = veronese_dimension(k);
  if (sets.size() > m)
    fail(ErrorCode::InvalidArgument, std::to_string(sets.size()) + " sets exceed the " + std::to_string(m) +
                                         " lifted coordinates of degree " + std::to_string(k));

  const auto monomials = veronese_monomials(k);
  const std::size_t dim = m + 1;  // plus the constant term, stored last
  const Frame frame = normalizing_frame(sets);
  const Scalar inv_scale = 1 / frame.scale;

  // Exact and floating lifts of the normalized points.
  std::vector<std::vector<std::vector<Scalar>>> exact(sets.size());
  std::vector<Eigen::MatrixXd> lifted(sets.size());
  std::size_t total_points = 0;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    lifted[s].resize(static_cast<Eigen::Index>(sets[s].size()), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < sets[s].size(); ++r) {
      Point4 y = inv_scale * (sets[s][r] - frame.center);
      auto row = veronese_lift(y, k);
      row.emplace_back(1);
      for (std::size_t c = 0; c < dim; ++c) lifted[s](static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c].get_d();
      exact[s].push_back(std::move(row));
    }
    total_points += sets[s].size();
  }

  auto certify = [&](const Eigen::VectorXd& w, int bits) -> std::optional<std::vector<Scalar>> {
    double top = w.cwiseAbs().maxCoeff();
    if (!(top > 0)) return std::nullopt;
    std::vector<Scalar> q(dim);
    bool nonconstant = false;
    for (std::size_t c = 0; c < dim; ++c) {
      q[c] = Scalar(static_cast<long>(std::llround(std::ldexp(w[static_cast<Eigen::Index>(c)] / top, bits))));
      if (c + 1 < dim && q[c] != 0) nonconstant = true;
    }
    if (!nonconstant) return std::nullopt;
    std::size_t on_zero = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      std::size_t pos = 0, neg = 0;
      for (const auto& row : exact[s]) {
        Scalar v = 0;
        for (std::size_t c = 0; c < dim; ++c)
          if (q[c] != 0) v += q[c] * row[c];
        int sg = sign(v);
        if (sg > 0) ++pos;
        else if (sg < 0) ++neg;
        else ++on_zero;
      }
      if (pos > caps[s] || neg > caps[s]) return std::nullopt;
    }
    if (total_points > 0 && on_zero == total_points) return std::nullopt;
    return q;
  };

  auto to_poly = [&](const std::vector<Scalar>& q) {
    MultiPoly4 h = MultiPoly4::constant(q[m]);
    for (std::size_t c = 0; c < m; ++c)
      if (q[c] != 0) h += MultiPoly4::monomial(monomials[c], q[c]);
    Vec4 scale{inv_scale, inv_scale, inv_scale, inv_scale};
    Vec4 shift = -inv_scale * frame.center;
    return primitive(h.affine_substitute(scale, shift));
  };

  SeededRng rng(options.seed);
  std::vector<Eigen::Index> order;
  for (unsigned restart = 0; restart < options.restarts; ++restart) {
    Eigen::VectorXd w(static_cast<Eigen::Index>(dim));
    for (auto& x : w) x = rng.normal();
    w.normalize();
    for (unsigned it = 0; it < options.iterations; ++it) {
      Eigen::MatrixXd rows(static_cast<Eigen::Index>(sets.size()), static_cast<Eigen::Index>(dim));
      bool balanced = true;
      for (std::size_t s = 0; s < sets.size(); ++s) {
        const auto& L = lifted[s];
        Eigen::VectorXd v = L * w;
        if (!float_balanced(v, caps[s])) balanced = false;
        const Eigen::Index n = v.size();
        auto row = rows.row(static_cast<Eigen::Index>(s));
        if (n == 0) {
          row.setZero();
          continue;
        }
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        auto by_value = [&](Eigen::Index a, Eigen::Index b) { return v[a] < v[b]; };
        auto mid = order.begin() + n / 2;
        std::nth_element(order.begin(), mid, order.end(), by_value);
        row = L.row(*mid);
        if (n % 2 == 0) {
          auto lower = std::max_element(order.begin(), mid, by_value);
          row += L.row(*lower);
        }
      }
      if (balanced) {
        // Coarse coefficients first; they keep later restrictions cheap.
        for (int bits : {30, 40, 52})
          if (auto q = certify(w, bits)) return to_poly(*q);
      }
      Eigen::MatrixXd gram = rows * rows.transpose();
      gram.diagonal().array() += 1e-12;
      Eigen::VectorXd z = gram.ldlt().solve(rows * w);
      w -= (0.5 + 0.5 * rng.unit()) * (rows.transpose() * z);
      double norm = w.norm();
      if (!(norm > 1e-300)) break;
      w /= norm;
    }
  }
  fail(ErrorCode::SearchBudgetExceeded, "no certified bisector of " + std::to_string(sets.size()) +
                                            " sets at lift degree " + std::to_string(k));
}

void PartitionParams::validate() const {
  if (delta < 0 || delta >= 1) fail(ErrorCode::InvalidArgument, "delta must lie in [0, 1)");
  if (!lift_degree_schedule.empty()) {
    if (lift_degree_schedule.size() != J)
      fail(ErrorCode::InvalidArgument, "lift degree schedule needs exactly J entries");
    for (unsigned j = 1; j <= J; ++j) {
      unsigned k = lift_degree_schedule[j - 1];
      if (k == 0 || veronese_dimension(k) < (std::size_t{1} << (j - 1)))
        fail(ErrorCode::InvalidArgument, "round " + std::to_string(j) + " lift degree " + std::to_string(k) +
                                             " cannot bisect " + std::to_string(std::size_t{1} << (j - 1)) +
                                             " cells");
    }
  }
  if (J > 40) fail(ErrorCode::InvalidArgument, "J is limited to 40");
}

std::string to_string(const SignVector& s) {
  std::string out;
  for (int v : s) out += v > 0 ? '+' : v < 0 ? '-' : '0';
  return out.empty() ? "()" : out;
}

bool on_zero_set(const SignVector& s) { return std::find(s.begin(), s.end(), 0) != s.end(); }

int PartitionPolynomial::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.degree();
  return d;
}

double PartitionPolynomial::reference_degree() const { return std::exp2(static_cast<double>(factors.size()) / 4.0); }

SignVector cell_id(const Point4& x, const PartitionPolynomial& part) {
  SignVector s;
  s.reserve(part.factors.size());
  for (const auto& f : part.factors) s.push_back(sign(f(x)));
  return s;
}

CellOccupancy occupancy(const std::vector<Point4>& points, const PartitionPolynomial& part) {
  CellOccupancy occ;
  for (const auto& p : points) {
    SignVector s = cell_id(p, part);
    if (on_zero_set(s)) {
      ++occ.zero_set;
      continue;
    }
    occ.largest = std::max(occ.largest, ++occ.cells[s]);
  }
  return occ;
}

PartitionPolynomial build_partition(const std::vector<Point4>& points, const PartitionParams& params) {
  params.validate();
  PartitionPolynomial part;
  part.delta = params.delta;
  std::vector<SignVector> signs(points.size());
  std::vector<bool> active(points.size(), true);

  for (unsigned j = 1; j <= params.J; ++j) {
    std::map<SignVector, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (active[i]) cells[signs[i]].push_back(i);

    const std::size_t cap_j = cumulative_cap(points.size(), j, params.delta);
    MultiPoly4 factor;
    if (cells.empty()) {
      factor = MultiPoly4::variable(0);
    } else {
      std::vector<std::vector<Point4>> sets;
      std::vector<std::size_t> caps;
      for (const auto& [sv, members] : cells) {
        std::vector<Point4> s;
        for (auto i : members) s.push_back(points[i]);
        caps.push_back(std::min(bisection_cap(s.size(), params.delta), cap_j));
        sets.push_back(std::move(s));
      }
      unsigned k = params.lift_degree_schedule.empty()
                       ? min_lift_degree((3 * sets.size() + 1) / 2)
                       : params.lift_degree_schedule[j - 1];
      BisectOptions opt;
      opt.seed = params.seed ^ (0x9E3779B97F4A7C15ULL * j);
      factor = ham_sandwich_bisect(sets, k, caps, opt);
    }

    std::size_t largest = 0;
    std::map<SignVector, std::size_t> counts;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!active[i]) {
        signs[i].push_back(0);
        continue;
      }
      int s = sign(factor(points[i]));
      signs[i].push_back(s);
      if (s == 0) {
        active[i] = false;
        continue;
      }
      largest = std::max(largest, ++counts[signs[i]]);
    }
    if (largest > cap_j)
      fail(ErrorCode::InvariantViolation, "round " + std::to_string(j) + " left a cell with " +
                                              std::to_string(largest) + " points, above the cap " +
                                              std::to_string(cap_j));
    part.factors.push_back(std::move(factor));
  }
  return part;
}

CrossingStats line_crossing_stats(const Line4& line, const PartitionPolynomial& part) {
  std::vector<UniPoly> restricted;
  for (std::size_t i = 0; i < part.factors.size(); ++i) {
    UniPoly f = restrict_to_line(part.factors[i], line);
    if (f.is_zero())
      fail(ErrorCode::LineInZeroSet, "factor " + std::to_string(i + 1) + " vanishes on " + to_string(line));
    restricted.push_back(std::move(f));
  }

  CrossingStats stats;
  auto roots = merged_real_roots(restricted);
  stats.zero_set_hits = roots.size();
  if (roots.empty()) {
    stats.interval_samples.emplace_back(0);
  } else {
    stats.interval_samples.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      stats.interval_samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    stats.interval_samples.push_back(roots.back().hi + 1);
  }
  std::set<SignVector> distinct;
  for (const auto& t : stats.interval_samples) {
    SignVector s;
    for (const auto& f : restricted) s.push_back(f.sign_at(t));
    distinct.insert(s);
    stats.interval_signs.push_back(std::move(s));
  }
  stats.distinct_cells = distinct.size();
  if (stats.distinct_cells > static_cast<std::size_t>(part.degree()) + 1)
    fail(ErrorCode::InvariantViolation, to_string(line) + " enters " + std::to_string(stats.distinct_cells) +
                                            " cells, more than D + 1 = " + std::to_string(part.degree() + 1));
  return stats;
}

namespace {

Scalar radical_inverse(std::size_t i, unsigned base) {
  Scalar out = 0;
  Scalar f(1, base);
  while (i > 0) {
    out += static_cast<unsigned long>(i % base) * f;
    f /= base;
    i /= base;
  }
  return out;
}

}  // namespace

FlatCrossingStats flat2_crossing_stats(const Flat2& flat, const PartitionPolynomial& part, std::size_t sample_budget) {
  std::vector<BiPoly> restricted;
  for (std::size_t i = 0; i < part.factors.size(); ++i) {
    BiPoly g = restrict_to_flat2(part.factors[i], flat);
    if (g.is_zero())
      fail(ErrorCode::FlatInZeroSet, "factor " + std::to_string(i + 1) + " vanishes on " + to_string(flat));
    restricted.push_back(std::move(g));
  }
  const std::size_t D = static_cast<std::size_t>(part.degree());
  FlatCrossingStats stats;
  stats.bound = D * D + D + 1;
  // Halton points in squares of side 2r, r cycling through 1/4, 1, 4, ..., 4^6.
  constexpr unsigned kScales = 8;
  std::set<SignVector> distinct;
  for (std::size_t i = 0; i < sample_budget; ++i) {
    std::size_t level = i % kScales;
    Scalar r = level == 0 ? Scalar(1, 4) : Scalar(mpz_class(1) << (2 * (level - 1)));
    std::size_t idx = i / kScales + 1;
    Scalar a = r * (2 * radical_inverse(idx, 2) - 1);
    Scalar b = r * (2 * radical_inverse(idx, 3) - 1);
    SignVector s;
    for (const auto& g : restricted) s.push_back(sign(g(a, b)));
    ++stats.samples;
    if (on_zero_set(s)) {
      ++stats.samples_on_zero_set;
      continue;
    }
    distinct.insert(std::move(s));
  }
  stats.distinct_cells = distinct.size();
  if (stats.distinct_cells > stats.bound)
    fail(ErrorCode::InvariantViolation, to_string(flat) + " shows " + std::to_string(stats.distinct_cells) +
                                            " sign vectors, above D^2 + D + 1 = " + std::to_string(stats.bound));
  return stats;
}

std::string dump_partition(const PartitionPolynomial& part) {
  std::ostringstream os;
  os << "partition\n";
  os << "J " << part.factors.size() << "\n";
  os << "delta " << to_string(part.delta) << "\n";
  os << "D " << part.degree() << "\n";
  for (std::size_t i = 0; i < part.factors.size(); ++i) {
    const auto& f = part.factors[i];
    os << "factor " << i + 1 << " degree " << f.degree() << " terms " << f.terms().size() << "\n";
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      const auto& [e, c] = *it;
      os << "  " << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << ' ' << to_string(c) << "\n";
    }
  }
  return os.str();
}

PartitionPolynomial parse_partition(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& what) -> void { throw ParseError(what, lineno, 1); };
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto expect_key = [&](const std::string& key) {
    if (!next()) bad("unexpected end of input, expected '" + key + "'");
    std::istringstream ls(line);
    std::string k, v;
    ls >> k >> v;
    if (k != key || v.empty()) bad("expected '" + key + " <value>'");
    return v;
  };

  if (!next() || line.rfind("partition", 0) != 0) bad("missing 'partition' header");
  PartitionPolynomial part;
  std::size_t J = 0;
  long D = 0;
  try {
    J = std::stoul(expect_key("J"));
    part.delta = parse_scalar(expect_key("delta"));
    D = std::stol(expect_key("D"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("malformed header value: ") + e.what());
  }
  for (std::size_t i = 0; i < J; ++i) {
    if (!next()) bad("missing factor " + std::to_string(i + 1));
    std::istringstream ls(line);
    std::string kw, dkw, tkw;
    std::size_t idx = 0, terms = 0;
    int degree = 0;
    if (!(ls >> kw >> idx >> dkw >> degree >> tkw >> terms) || kw != "factor" || dkw != "degree" || tkw != "terms")
      bad("expected 'factor <i> degree <d> terms <n>'");
    MultiPoly4 f;
    for (std::size_t t = 0; t < terms; ++t) {
      if (!next()) bad("missing term");
      std::istringstream ts(line);
      Exponent4 e{};
      std::string coeff;
      if (!(ts >> e[0] >> e[1] >> e[2] >> e[3] >> coeff)) bad("expected '<e1> <e2> <e3> <e4> <coefficient>'");
      try {
        f += MultiPoly4::monomial(e, parse_scalar(coeff));
      } catch (const Error& err) {
        bad(err.what());
      }
    }
    if (f.is_zero()) bad("factor " + std::to_string(i + 1) + " is the zero polynomial");
    if (f.degree() != degree) bad("factor " + std::to_string(i + 1) + " degree mismatch");
    part.factors.push_back(std::move(f));
  }
  if (part.degree() != D) bad("total degree mismatch");
  return part;
}

}  // namespace incid4
