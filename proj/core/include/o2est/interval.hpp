#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace o2est {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct IntervalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interval with exact rational endpoints.  Field arithmetic is exact
// (rationals are closed under +,-,*,/); only roots and the pi enclosure
// introduce genuine intervals, via directed integer-root enclosures.
class IntervalScalar {
 public:
  IntervalScalar() : lo_(0), hi_(0) {}
  IntervalScalar(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT: implicit
  IntervalScalar(long v) : lo_(v), hi_(v) {}             // NOLINT: implicit
  IntervalScalar(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  double lo_d() const { return static_cast<double>(lo_); }
  double hi_d() const { return static_cast<double>(hi_); }

  IntervalScalar operator-() const { return {-hi_, -lo_}; }
  friend IntervalScalar operator+(const IntervalScalar& a,
                                  const IntervalScalar& b);
  friend IntervalScalar operator-(const IntervalScalar& a,
                                  const IntervalScalar& b);
  friend IntervalScalar operator*(const IntervalScalar& a,
                                  const IntervalScalar& b);
  friend IntervalScalar operator/(const IntervalScalar& a,
                                  const IntervalScalar& b);

  /// Certainly lhs <= rhs: hi(lhs) <= lo(rhs).
  friend bool certainly_leq(const IntervalScalar& a, const IntervalScalar& b) {
    return a.hi_ <= b.lo_;
  }
  friend bool certainly_lt(const IntervalScalar& a, const IntervalScalar& b) {
    return a.hi_ < b.lo_;
  }

 private:
  Rational lo_, hi_;
};

/// k-th root enclosure with `digits` certified decimal digits; exact when
/// the argument is a perfect k-th power of a rational.
IntervalScalar root_enclosure(const Rational& x, unsigned k,
                              unsigned digits = 30);
inline IntervalScalar sqrt_enclosure(const Rational& x, unsigned digits = 30) {
  return root_enclosure(x, 2, digits);
}
IntervalScalar sqrt_enclosure(const IntervalScalar& x, unsigned digits = 30);

/// x^e for integer e (negative allowed when 0 is excluded).
IntervalScalar pow_int(const IntervalScalar& x, long e);

/// The ledger's default pi enclosure: [355/113 - 1e-6, 355/113].
IntervalScalar pi_default();
/// A tighter 30-digit pi enclosure, used for the refinement-monotonicity
/// checks.
IntervalScalar pi_refined();

// ---------------------------------------------------------------------------
// Expression trees over IntervalScalar, for the ledger catalog.

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;
using Bindings = std::map<std::string, Rational>;

class Expr {
 public:
  enum class Kind { Const, Sym, Add, Sub, Mul, Div, Neg, Root, PowInt, Pi };

  static ExprPtr constant(const Rational& v);
  static ExprPtr sym(const std::string& name);
  static ExprPtr pi();
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr root(ExprPtr a, unsigned k);  // k-th root, a >= 0
  static ExprPtr pow(ExprPtr a, long e);

  Kind kind;
  Rational value;        // Const
  std::string name;      // Sym
  ExprPtr lhs, rhs;      // binary / unary (lhs)
  unsigned root_k = 2;   // Root
  long exponent = 1;     // PowInt

  /// Evaluate with outward rounding.  Missing binding or division by an
  /// interval containing zero raise IntervalError.
  IntervalScalar eval(const Bindings& bindings, unsigned digits = 30,
                      bool refined_pi = false) const;
};

// Expression-building sugar used by the catalog definitions.
ExprPtr operator+(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a, ExprPtr b);
ExprPtr operator*(ExprPtr a, ExprPtr b);
ExprPtr operator/(ExprPtr a, ExprPtr b);
ExprPtr lit(long num, long den = 1);
ExprPtr lit(const Rational& r);

}  // namespace o2est
