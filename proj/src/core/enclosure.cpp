#include "enclosure.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "errors.hpp"

namespace incid4 {

namespace {

// Scratch MPFR value with RAII.
struct Tmp {
  mpfr_t v;
  Tmp() { mpfr_init2(v, Enclosure::kPrecision); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
};

// Exact q-th root of a nonnegative rational, if it exists.
std::optional<Scalar> exact_root(const Scalar& x, unsigned long q) {
  if (q == 1) return x;
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), x.get_num_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), x.get_den_mpz_t(), q) == 0) return std::nullopt;
  return Scalar(num, den);
}

Scalar rational_pow(const Scalar& base, long p) {
  Scalar out = 1;
  Scalar b = p < 0 ? Scalar(1 / base) : base;
  for (long i = 0; i < std::labs(p); ++i) out *= b;
  return out;
}

}  // namespace

Enclosure::Enclosure() {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  set_exact(0);
}

Enclosure::Enclosure(const Scalar& exact) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  set_exact(exact);
}

Enclosure::Enclosure(const Enclosure& o) : exact_(o.exact_) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& o) noexcept : Enclosure() {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  exact_.swap(o.exact_);
}

Enclosure& Enclosure::operator=(const Enclosure& o) {
  if (this != &o) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    exact_ = o.exact_;
  }
  return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  exact_.swap(o.exact_);
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Enclosure::set_exact(const Scalar& v) {
  exact_ = v;
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

double Enclosure::mid() const {
  if (exact_) return exact_->get_d();
  Tmp m;
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Enclosure::relative_width() const {
  Tmp w;
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU) / std::max(std::fabs(mid()), 1.0);
}

bool Enclosure::contains(const Scalar& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  if (a.exact_ && b.exact_) return Enclosure(*a.exact_ + *b.exact_);
  Enclosure r;
  r.exact_.reset();
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  if (a.exact_ && b.exact_) return Enclosure(*a.exact_ - *b.exact_);
  Enclosure r;
  r.exact_.reset();
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  if (a.exact_ && b.exact_) return Enclosure(*a.exact_ * *b.exact_);
  Enclosure r;
  r.exact_.reset();
  Tmp t;
  bool first = true;
  for (auto x : {a.lo_, a.hi_})
    for (auto y : {b.lo_, b.hi_}) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.v, r.lo_)) mpfr_set(r.lo_, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.v, r.hi_)) mpfr_set(r.hi_, t.v, MPFR_RNDU);
      first = false;
    }
  return r;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) fail(ErrorCode::DomainError, "division by an interval holding 0");
  if (a.exact_ && b.exact_) return Enclosure(*a.exact_ / *b.exact_);
  Enclosure r;
  r.exact_.reset();
  Tmp t;
  bool first = true;
  for (auto x : {a.lo_, a.hi_})
    for (auto y : {b.lo_, b.hi_}) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.v, r.lo_)) mpfr_set(r.lo_, t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.v, r.hi_)) mpfr_set(r.hi_, t.v, MPFR_RNDU);
      first = false;
    }
  return r;
}

Enclosure pow(const Enclosure& base, const Scalar& exponent) {
  if (mpfr_sgn(base.lo_) < 0) fail(ErrorCode::DomainError, "power of a possibly negative base");
  if (exponent == 0) return Enclosure(1);
  const bool base_touches_zero = mpfr_zero_p(base.lo_);
  if (base_touches_zero && exponent < 0) fail(ErrorCode::DomainError, "negative power of a base that may be 0");

  const mpz_class& q = exponent.get_den();
  if (q <= 4 && abs(exponent.get_num()) <= 64) {
    const unsigned long qn = q.get_ui();
    const long p = exponent.get_num().get_si();
    if (base.exact_) {
      Scalar powered = rational_pow(*base.exact_, p);
      if (auto root = exact_root(powered, qn)) return Enclosure(*root);
      Enclosure r(powered);
      r.exact_.reset();
      mpfr_rootn_ui(r.lo_, r.lo_, qn, MPFR_RNDD);
      mpfr_rootn_ui(r.hi_, r.hi_, qn, MPFR_RNDU);
      return r;
    }
  }

  Enclosure r;
  r.exact_.reset();
  Tmp elo, ehi, t;
  mpfr_set_q(elo.v, exponent.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(ehi.v, exponent.get_mpq_t(), MPFR_RNDU);
  bool first = true;
  for (auto x : {base.lo_, base.hi_})
    for (auto e : {elo.v, ehi.v}) {
      mpfr_pow(t.v, x, e, MPFR_RNDD);
      if (first || mpfr_less_p(t.v, r.lo_)) mpfr_set(r.lo_, t.v, MPFR_RNDD);
      mpfr_pow(t.v, x, e, MPFR_RNDU);
      if (first || mpfr_greater_p(t.v, r.hi_)) mpfr_set(r.hi_, t.v, MPFR_RNDU);
      first = false;
    }
  return r;
}

bool certainly_less(const Enclosure& a, const Enclosure& b) { return mpfr_less_p(a.hi_, b.lo_); }
bool certainly_le(const Enclosure& a, const Enclosure& b) { return mpfr_lessequal_p(a.hi_, b.lo_); }

std::string Enclosure::to_string(int digits) const {
  if (exact_ && exact_->get_den() == 1) return exact_->get_num().get_str();
  Tmp m;
  if (exact_) {
    mpfr_set_q(m.v, exact_->get_mpq_t(), MPFR_RNDN);
  } else {
    mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, m.v);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace incid4
