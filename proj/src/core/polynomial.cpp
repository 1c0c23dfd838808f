#include "polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace incid4 {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }

UniPoly UniPoly::monomial(std::size_t degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::affine(const Scalar& base, const Scalar& slope) { return UniPoly({base, slope}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar UniPoly::operator()(const Scalar& t) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int UniPoly::sign_at(const Scalar& t) const { return sgn((*this)(t)); }

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs_.size());
  mpz_class content = 0;
  for (const auto& c : coeffs_) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<Scalar> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(mpz_class(v / content));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  Scalar inv = 1 / leading();
  r *= inv;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << incid4::to_string(mag);
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivRem divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Scalar> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Scalar> quot(rem.size() - db);
  Scalar inv_lead = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Scalar q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  DivRem qr = divrem(a, b);
  if (!qr.remainder.is_zero()) fail(ErrorCode::Internal, "inexact polynomial division");
  return qr.quotient;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.primitive();
  UniPoly y = b.primitive();
  while (!y.is_zero()) {
    UniPoly r = divrem(x, y).remainder.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() <= 0) return f;
  UniPoly g = gcd(f, f.derivative());
  return exact_div(f, g).primitive();
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Scalar& c) {
  BiPoly p;
  p.add_term({0, 0}, c);
  p.recompute_degree();
  return p;
}

BiPoly BiPoly::x() { return monomial(1, 0); }
BiPoly BiPoly::y() { return monomial(0, 1); }

BiPoly BiPoly::monomial(unsigned ex, unsigned ey, const Scalar& c) {
  BiPoly p;
  p.add_term({ex, ey}, c);
  p.recompute_degree();
  return p;
}

void BiPoly::add_term(const Exponent2& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BiPoly::recompute_degree() {
  degree_ = -1;
  for (const auto& [e, c] : terms_) degree_ = std::max(degree_, static_cast<int>(e.first + e.second));
}

int BiPoly::degree_in_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first));
  return d;
}

int BiPoly::degree_in_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.second));
  return d;
}

Scalar BiPoly::operator()(const Scalar& x, const Scalar& y) const {
  Scalar acc = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (unsigned i = 0; i < e.first; ++i) t *= x;
    for (unsigned i = 0; i < e.second; ++i) t *= y;
    acc += t;
  }
  return acc;
}

std::vector<UniPoly> BiPoly::coefficients_in_y() const {
  const int dy = degree_in_y();
  std::vector<std::vector<Scalar>> raw(static_cast<std::size_t>(dy + 1));
  for (const auto& [e, c] : terms_) {
    auto& v = raw[e.second];
    if (v.size() <= e.first) v.resize(e.first + 1);
    v[e.first] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

std::vector<UniPoly> BiPoly::coefficients_in_x() const {
  const int dx = degree_in_x();
  std::vector<std::vector<Scalar>> raw(static_cast<std::size_t>(dx + 1));
  for (const auto& [e, c] : terms_) {
    auto& v = raw[e.first];
    if (v.size() <= e.second) v.resize(e.second + 1);
    v[e.second] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

BiPoly BiPoly::sheared(const Scalar& shear) const {
  if (shear == 0) return *this;
  BiPoly sub = x() - shear * y();
  std::vector<BiPoly> powers{constant(1)};
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e.first) powers.push_back(powers.back() * sub);
    out += (c * powers[e.first]) * monomial(0, e.second);
  }
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  recompute_degree();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  recompute_degree();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  r.recompute_degree();
  return r;
}

BiPoly operator*(const Scalar& s, const BiPoly& a) {
  BiPoly r;
  if (s == 0) return r;
  r = a;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = e.first == 0 && e.second == 0;
    if (unit || mag != 1) os << incid4::to_string(mag);
    bool need_star = !unit && mag != 1;
    auto emit = [&](const char* v, unsigned k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << v;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    emit("x", e.first);
    emit("y", e.second);
  }
  return os.str();
}

// ------------------------------------------------------------- MultiPoly4

MultiPoly4 MultiPoly4::constant(const Scalar& c) { return monomial({0, 0, 0, 0}, c); }

MultiPoly4 MultiPoly4::variable(unsigned index) {
  if (index > 3) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Exponent4 e{0, 0, 0, 0};
  e[index] = 1;
  return monomial(e, 1);
}

MultiPoly4 MultiPoly4::monomial(const Exponent4& e, const Scalar& c) {
  MultiPoly4 p;
  p.add_term(e, c);
  p.recompute_degree();
  return p;
}

void MultiPoly4::add_term(const Exponent4& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly4::recompute_degree() {
  degree_ = -1;
  for (const auto& [e, c] : terms_) degree_ = std::max(degree_, static_cast<int>(total_degree(e)));
}

Scalar MultiPoly4::coefficient(const Exponent4& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar MultiPoly4::operator()(const Point4& x) const {
  // Power tables keep evaluation linear in the number of terms.
  std::array<std::vector<Scalar>, 4> powers;
  for (unsigned i = 0; i < 4; ++i) powers[i].push_back(Scalar(1));
  Scalar acc = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (unsigned i = 0; i < 4; ++i) {
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * x[i]);
      if (e[i]) t *= pw[e[i]];
    }
    acc += t;
  }
  return acc;
}

MultiPoly4 MultiPoly4::pow(unsigned e) const {
  MultiPoly4 result = constant(1);
  MultiPoly4 base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly4 MultiPoly4::affine_substitute(const Vec4& scale, const Vec4& shift) const {
  std::array<std::vector<MultiPoly4>, 4> powers;
  for (unsigned i = 0; i < 4; ++i) {
    powers[i].push_back(constant(1));
    powers[i].push_back(scale[i] * variable(i) + constant(shift[i]));
  }
  MultiPoly4 out;
  for (const auto& [e, c] : terms_) {
    MultiPoly4 t = constant(c);
    for (unsigned i = 0; i < 4; ++i) {
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * pw[1]);
      if (e[i]) t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

MultiPoly4 MultiPoly4::operator-() const {
  MultiPoly4 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly4& MultiPoly4::operator+=(const MultiPoly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  recompute_degree();
  return *this;
}

MultiPoly4& MultiPoly4::operator-=(const MultiPoly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  recompute_degree();
  return *this;
}

MultiPoly4 operator*(const MultiPoly4& a, const MultiPoly4& b) {
  MultiPoly4 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
  r.recompute_degree();
  return r;
}

MultiPoly4 operator*(const Scalar& s, const MultiPoly4& a) {
  MultiPoly4 r;
  if (s == 0) return r;
  r = a;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

std::string MultiPoly4::to_string() const {
  if (is_zero()) return "0";
  // Highest total degree first, then lexicographically descending exponents.
  std::vector<std::pair<Exponent4, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = total_degree(e) == 0;
    if (unit || mag != 1) os << incid4::to_string(mag);
    bool need_star = !unit && mag != 1;
    for (unsigned i = 0; i < 4; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------ restriction

UniPoly restrict_to_line(const MultiPoly4& p, const Point4& base, const Vec4& direction) {
  std::array<std::vector<UniPoly>, 4> powers;
  for (unsigned i = 0; i < 4; ++i) {
    powers[i].push_back(UniPoly::constant(1));
    powers[i].push_back(UniPoly::affine(base[i], direction[i]));
  }
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    UniPoly t = UniPoly::constant(c);
    for (unsigned i = 0; i < 4; ++i) {
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * pw[1]);
      if (e[i]) t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

BiPoly restrict_to_plane(const MultiPoly4& p, const Point4& base, const Vec4& u, const Vec4& v) {
  std::array<std::vector<BiPoly>, 4> powers;
  for (unsigned i = 0; i < 4; ++i) {
    powers[i].push_back(BiPoly::constant(1));
    powers[i].push_back(BiPoly::constant(base[i]) + u[i] * BiPoly::x() + v[i] * BiPoly::y());
  }
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    BiPoly t = BiPoly::constant(c);
    for (unsigned i = 0; i < 4; ++i) {
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * pw[1]);
      if (e[i]) t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

}  // namespace incid4
