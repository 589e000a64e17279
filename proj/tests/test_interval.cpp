#include <doctest.h>

#include <random>

#include "o2est/interval.hpp"

using namespace o2est;

TEST_CASE("exact rational arithmetic stays point-valued") {
  IntervalScalar a(Rational(1, 3));
  IntervalScalar b(Rational(1, 6));
  IntervalScalar s = a + b;
  CHECK(s.is_point());
  CHECK(s.lo() == Rational(1, 2));

  IntervalScalar p = a * b;
  CHECK(p.lo() == Rational(1, 18));

  IntervalScalar q = a / b;
  CHECK(q.lo() == Rational(2));
}

TEST_CASE("division by interval containing zero throws") {
  IntervalScalar z(Rational(-1), Rational(1));
  CHECK_THROWS_AS(IntervalScalar(Rational(1)) / z, IntervalError);
}

TEST_CASE("sqrt enclosure is exact on perfect squares") {
  IntervalScalar r = sqrt_enclosure(Rational(25, 4));
  CHECK(r.is_point());
  CHECK(r.lo() == Rational(5, 2));

  IntervalScalar r2 = sqrt_enclosure(Rational(49, 9));
  CHECK(r2.lo() == Rational(7, 3));
}

TEST_CASE("sqrt enclosure brackets irrational roots to 30 digits") {
  IntervalScalar r = sqrt_enclosure(Rational(2));
  CHECK(r.lo() * r.lo() <= IntervalScalar(Rational(2)).lo());
  CHECK(r.hi() * r.hi() >= Rational(2));
  CHECK(r.width() <= Rational(BigInt(1), boost::multiprecision::pow(
                                             BigInt(10), 29)));
}

TEST_CASE("pi enclosures contain pi and nest") {
  IntervalScalar coarse = pi_default();
  IntervalScalar fine = pi_refined();
  CHECK(coarse.lo() <= fine.lo());
  CHECK(fine.hi() <= coarse.hi());
  // the fine enclosure straddles pi: 16-digit truncation below, rounded
  // 16-digit value above
  CHECK(fine.lo() > Rational(3141592653589793ll, 1000000000000000ll));
  CHECK(fine.hi() < Rational(3141592653589794ll, 1000000000000000ll));
}

TEST_CASE("expression eval: pi * sqrt(3) / 4 with refined pi is tight") {
  ExprPtr ex = Expr::pi() * Expr::root(lit(3), 2) / lit(4);
  IntervalScalar v = ex->eval({}, 30, /*refined_pi=*/true);
  CHECK(v.lo_d() == doctest::Approx(1.3603).epsilon(1e-3));
  CHECK(v.width() < Rational(BigInt(1), boost::multiprecision::pow(
                                            BigInt(10), 25)));
}

TEST_CASE("expression eval: (1 - 25 theta / 2)^(-1/2) at theta = 1/25") {
  // exact algebra down to the final square root of 1/2
  ExprPtr theta = Expr::sym("theta");
  ExprPtr ex = lit(1) / Expr::root(lit(1) - lit(25, 2) * theta, 2);
  IntervalScalar v = ex->eval({{"theta", Rational(1, 25)}});
  // encloses sqrt(2)
  CHECK(v.lo() * v.lo() <= Rational(2));
  CHECK(v.hi() * v.hi() >= Rational(2));
  CHECK(v.width() < Rational(BigInt(1), boost::multiprecision::pow(
                                            BigInt(10), 25)));
}

TEST_CASE("unbound symbol raises") {
  ExprPtr ex = Expr::sym("x") + lit(1);
  CHECK_THROWS_AS(ex->eval({}), IntervalError);
}

namespace {

// random expression generator for the soundness property
ExprPtr random_expr(std::mt19937_64& gen, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  switch (pick(gen)) {
    case 0:
      return lit(num(gen), den(gen));
    case 1:
      return Expr::pi();
    case 2:
      return random_expr(gen, depth - 1) + random_expr(gen, depth - 1);
    case 3:
      return random_expr(gen, depth - 1) - random_expr(gen, depth - 1);
    case 4:
      return random_expr(gen, depth - 1) * random_expr(gen, depth - 1);
    case 5: {
      // force a positive argument for the root
      ExprPtr a = random_expr(gen, depth - 1);
      return Expr::root(a * a + lit(1, 7), 2);
    }
    default:
      return Expr::pow(random_expr(gen, depth - 1), 2);
  }
}

double eval_double(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Const:
      return static_cast<double>(e.value);
    case Expr::Kind::Pi:
      return 3.14159265358979323846;
    case Expr::Kind::Add:
      return eval_double(*e.lhs) + eval_double(*e.rhs);
    case Expr::Kind::Sub:
      return eval_double(*e.lhs) - eval_double(*e.rhs);
    case Expr::Kind::Mul:
      return eval_double(*e.lhs) * eval_double(*e.rhs);
    case Expr::Kind::Div:
      return eval_double(*e.lhs) / eval_double(*e.rhs);
    case Expr::Kind::Neg:
      return -eval_double(*e.lhs);
    case Expr::Kind::Root:
      return std::pow(eval_double(*e.lhs), 1.0 / e.root_k);
    case Expr::Kind::PowInt:
      return std::pow(eval_double(*e.lhs), static_cast<double>(e.exponent));
    default:
      return 0.0;
  }
}

}  // namespace

TEST_CASE("soundness: floating evaluation lies inside the interval") {
  std::mt19937_64 gen(20260809);
  int checked = 0;
  for (int trial = 0; checked < 1000; ++trial) {
    REQUIRE(trial < 5000);
    ExprPtr ex = random_expr(gen, 3);
    IntervalScalar v;
    try {
      v = ex->eval({});
    } catch (const IntervalError&) {
      continue;  // division through zero etc.
    }
    double d = eval_double(*ex);
    if (!std::isfinite(d)) continue;
    // allow a hair of floating slop around the exact enclosure
    double pad = 1e-9 * (1.0 + std::abs(d));
    CHECK(d >= v.lo_d() - pad);
    CHECK(d <= v.hi_d() + pad);
    ++checked;
  }
  CHECK(checked == 1000);
}
