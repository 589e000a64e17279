#include "o2est/interval.hpp"

#include <utility>

namespace o2est {

IntervalScalar::IntervalScalar(const Rational& lo, const Rational& hi)
    : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw IntervalError("interval endpoints out of order");
}

IntervalScalar operator+(const IntervalScalar& a, const IntervalScalar& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

IntervalScalar operator-(const IntervalScalar& a, const IntervalScalar& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

IntervalScalar operator*(const IntervalScalar& a, const IntervalScalar& b) {
  Rational c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_;
  Rational c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return {lo, hi};
}

IntervalScalar operator/(const IntervalScalar& a, const IntervalScalar& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0)
    throw IntervalError("division by interval containing zero");
  IntervalScalar inv(Rational(1) / b.hi_, Rational(1) / b.lo_);
  return a * inv;
}

namespace {

// floor of the k-th root of a nonnegative integer, by Newton/bisection on
// cpp_int.
BigInt ikroot(const BigInt& n, unsigned k) {
  if (n < 0) throw IntervalError("ikroot: negative argument");
  if (n == 0 || n == 1) return n;
  if (k == 1) return n;
  // initial upper bound: 2^(ceil(bits/k))
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  BigInt hi = BigInt(1) << (bits / k + 1);
  BigInt lo = 0;
  while (lo < hi - 1) {
    BigInt mid = (lo + hi) / 2;
    BigInt p = boost::multiprecision::pow(mid, k);
    if (p <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

IntervalScalar root_enclosure(const Rational& x, unsigned k, unsigned digits) {
  if (x < 0) throw IntervalError("root_enclosure: negative argument");
  if (k == 0) throw IntervalError("root_enclosure: zeroth root");
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);

  // exact case: both parts perfect k-th powers
  BigInt rn = ikroot(num, k), rd = ikroot(den, k);
  if (boost::multiprecision::pow(rn, k) == num &&
      boost::multiprecision::pow(rd, k) == den) {
    Rational exact(rn, rd);
    return {exact, exact};
  }

  // directed enclosure: root(num/den) = root(num * den^(k-1)) / den,
  // scaled by 10^digits.
  BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  BigInt scaled = num * boost::multiprecision::pow(den, k - 1) *
                  boost::multiprecision::pow(scale, k);
  BigInt r = ikroot(scaled, k);
  // r^k <= scaled < (r+1)^k  =>  root(x) in [r, r+1] / (den * 10^digits)
  Rational lo(r, den * scale);
  Rational hi(r + 1, den * scale);
  return {lo, hi};
}

IntervalScalar sqrt_enclosure(const IntervalScalar& x, unsigned digits) {
  if (x.lo() < 0) throw IntervalError("sqrt_enclosure: negative interval");
  IntervalScalar lo = root_enclosure(x.lo(), 2, digits);
  IntervalScalar hi = root_enclosure(x.hi(), 2, digits);
  return {lo.lo(), hi.hi()};
}

IntervalScalar pow_int(const IntervalScalar& x, long e) {
  if (e == 0) return IntervalScalar(Rational(1));
  if (e < 0) return IntervalScalar(Rational(1)) / pow_int(x, -e);
  IntervalScalar acc(Rational(1));
  IntervalScalar base = x;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  // even powers of sign-crossing intervals: clamp below at 0
  if (e % 2 == 0 && acc.lo() < 0) return {Rational(0), acc.hi()};
  return acc;
}

IntervalScalar pi_default() {
  Rational hi(355, 113);
  Rational lo = hi - Rational(1, 1000000);
  return {lo, hi};
}

IntervalScalar pi_refined() {
  // 3.141592653589793238462643383279 truncated; pi lies strictly between
  // this 30-digit truncation and its successor.
  BigInt digits("3141592653589793238462643383279");
  BigInt scale = boost::multiprecision::pow(BigInt(10), 30);
  return {Rational(digits, scale), Rational(digits + 1, scale)};
}

// --- expression trees -------------------------------------------------------

namespace {
std::shared_ptr<Expr> make(Expr::Kind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}
}  // namespace

ExprPtr Expr::constant(const Rational& v) {
  auto e = make(Kind::Const);
  e->value = v;
  return e;
}

ExprPtr Expr::sym(const std::string& name) {
  auto e = make(Kind::Sym);
  e->name = name;
  return e;
}

ExprPtr Expr::pi() { return make(Kind::Pi); }

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  auto e = make(Kind::Add);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
  auto e = make(Kind::Sub);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  auto e = make(Kind::Mul);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
  auto e = make(Kind::Div);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::neg(ExprPtr a) {
  auto e = make(Kind::Neg);
  e->lhs = std::move(a);
  return e;
}

ExprPtr Expr::root(ExprPtr a, unsigned k) {
  auto e = make(Kind::Root);
  e->lhs = std::move(a);
  e->root_k = k;
  return e;
}

ExprPtr Expr::pow(ExprPtr a, long exp) {
  auto e = make(Kind::PowInt);
  e->lhs = std::move(a);
  e->exponent = exp;
  return e;
}

IntervalScalar Expr::eval(const Bindings& bindings, unsigned digits,
                          bool refined_pi) const {
  switch (kind) {
    case Kind::Const:
      return IntervalScalar(value);
    case Kind::Sym: {
      auto it = bindings.find(name);
      if (it == bindings.end())
        throw IntervalError("unbound symbol: " + name);
      return IntervalScalar(it->second);
    }
    case Kind::Pi:
      return refined_pi ? pi_refined() : pi_default();
    case Kind::Add:
      return lhs->eval(bindings, digits, refined_pi) +
             rhs->eval(bindings, digits, refined_pi);
    case Kind::Sub:
      return lhs->eval(bindings, digits, refined_pi) -
             rhs->eval(bindings, digits, refined_pi);
    case Kind::Mul:
      return lhs->eval(bindings, digits, refined_pi) *
             rhs->eval(bindings, digits, refined_pi);
    case Kind::Div:
      return lhs->eval(bindings, digits, refined_pi) /
             rhs->eval(bindings, digits, refined_pi);
    case Kind::Neg:
      return -lhs->eval(bindings, digits, refined_pi);
    case Kind::Root: {
      IntervalScalar a = lhs->eval(bindings, digits, refined_pi);
      if (a.lo() < 0) throw IntervalError("root of negative interval");
      IntervalScalar lo_r = root_enclosure(a.lo(), root_k, digits);
      IntervalScalar hi_r = root_enclosure(a.hi(), root_k, digits);
      return {lo_r.lo(), hi_r.hi()};
    }
    case Kind::PowInt:
      return pow_int(lhs->eval(bindings, digits, refined_pi), exponent);
  }
  throw IntervalError("eval: unreachable");
}

ExprPtr operator+(ExprPtr a, ExprPtr b) {
  return Expr::add(std::move(a), std::move(b));
}
ExprPtr operator-(ExprPtr a, ExprPtr b) {
  return Expr::sub(std::move(a), std::move(b));
}
ExprPtr operator*(ExprPtr a, ExprPtr b) {
  return Expr::mul(std::move(a), std::move(b));
}
ExprPtr operator/(ExprPtr a, ExprPtr b) {
  return Expr::div(std::move(a), std::move(b));
}
ExprPtr lit(long num, long den) { return Expr::constant(Rational(num, den)); }
ExprPtr lit(const Rational& r) { return Expr::constant(r); }

}  // namespace o2est
