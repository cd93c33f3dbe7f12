#include "qquery/ring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qquery {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("RingElem: integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("RingElem: integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("RingElem: integer overflow");
  return r;
}

// (p + q r) for r = sqrt 2
struct ZRoot2 {
  std::int64_t p = 0;
  std::int64_t q = 0;
};

ZRoot2 add(ZRoot2 x, ZRoot2 y) { return {checked_add(x.p, y.p), checked_add(x.q, y.q)}; }
ZRoot2 sub(ZRoot2 x, ZRoot2 y) { return {checked_sub(x.p, y.p), checked_sub(x.q, y.q)}; }
ZRoot2 mul(ZRoot2 x, ZRoot2 y) {
  return {checked_add(checked_mul(x.p, y.p), checked_mul(2, checked_mul(x.q, y.q))),
          checked_add(checked_mul(x.p, y.q), checked_mul(x.q, y.p))};
}
// x * sqrt 2 = 2q + p r
ZRoot2 times_root2(ZRoot2 x) { return {checked_mul(2, x.q), x.p}; }

}  // namespace

RingElem::RingElem(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int e)
    : a_(a), b_(b), c_(c), d_(d), e_(e) {
  if (e < 0) throw std::invalid_argument("RingElem: negative denominator exponent");
  normalize();
}

void RingElem::normalize() {
  if (is_zero()) {
    e_ = 0;
    return;
  }
  // (p + q r) / r = q + (p/2) r, exact iff p is even.
  while (e_ > 0 && a_ % 2 == 0 && c_ % 2 == 0) {
    const std::int64_t na = b_;
    const std::int64_t nb = a_ / 2;
    const std::int64_t nc = d_;
    const std::int64_t nd = c_ / 2;
    a_ = na;
    b_ = nb;
    c_ = nc;
    d_ = nd;
    --e_;
  }
}

RingElem RingElem::rescaled(int target) const {
  ZRoot2 re{a_, b_};
  ZRoot2 im{c_, d_};
  for (int k = e_; k < target; ++k) {
    re = times_root2(re);
    im = times_root2(im);
  }
  RingElem out;
  out.a_ = re.p;
  out.b_ = re.q;
  out.c_ = im.p;
  out.d_ = im.q;
  out.e_ = target;
  return out;
}

RingElem operator+(const RingElem& x, const RingElem& y) {
  const int e = std::max(x.e_, y.e_);
  const RingElem xs = x.rescaled(e);
  const RingElem ys = y.rescaled(e);
  return {checked_add(xs.a_, ys.a_), checked_add(xs.b_, ys.b_), checked_add(xs.c_, ys.c_),
          checked_add(xs.d_, ys.d_), e};
}

RingElem operator-(const RingElem& x, const RingElem& y) { return x + (-y); }

RingElem operator*(const RingElem& x, const RingElem& y) {
  const ZRoot2 xr{x.a_, x.b_};
  const ZRoot2 xi{x.c_, x.d_};
  const ZRoot2 yr{y.a_, y.b_};
  const ZRoot2 yi{y.c_, y.d_};
  const ZRoot2 re = sub(mul(xr, yr), mul(xi, yi));
  const ZRoot2 im = add(mul(xr, yi), mul(xi, yr));
  return {re.p, re.q, im.p, im.q, x.e_ + y.e_};
}

QSqrt2 RingElem::real_value() const {
  // (a + b r) / r^e with e = 2k or 2k + 1; (a + b r)/r = b + (a/2) r.
  Rational scale(1);
  scale /= Rational(BigInt(1) << (e_ / 2));
  const Rational a(BigInt(static_cast<long>(a_)));
  const Rational b(BigInt(static_cast<long>(b_)));
  if (e_ % 2 == 0) return {Rational(a * scale), Rational(b * scale)};
  return {Rational(b * scale), Rational(a * scale / 2)};
}

std::complex<double> RingElem::to_complex() const {
  const double r = std::sqrt(2.0);
  const double s = std::pow(r, -e_);
  return {(static_cast<double>(a_) + static_cast<double>(b_) * r) * s,
          (static_cast<double>(c_) + static_cast<double>(d_) * r) * s};
}

std::string RingElem::to_string() const {
  std::ostringstream os;
  os << "(" << a_ << (b_ < 0 ? "" : "+") << b_ << "r";
  if (!is_real()) os << " + i(" << c_ << (d_ < 0 ? "" : "+") << d_ << "r)";
  os << ")";
  if (e_ > 0) os << "/r^" << e_;
  return os.str();
}

}  // namespace qquery
