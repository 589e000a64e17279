#include <doctest.h>

#include <cmath>
#include <numbers>

#include "o2est/matrix.hpp"
#include "o2est/rng.hpp"

using namespace o2est;

namespace {
ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}
}  // namespace

TEST_CASE("operator norm of small exemplars") {
  CHECK(operator_norm(ComplexMatrix::Identity(5, 5)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(operator_norm(diag2(1, 2)) == doctest::Approx(2.0).epsilon(1e-10));

  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  // eigenvalues of [[1,1],[1,-1]] are +-sqrt(2) (hand oracle: char poly
  // x^2 - 2)
  CHECK(operator_norm(h) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("operator norm rejects bad input") {
  CHECK_THROWS_AS(operator_norm(ComplexMatrix()), InputError);
  ComplexMatrix nan1(1, 1);
  nan1(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(operator_norm(nan1), InputError);
}

TEST_CASE("power iteration path agrees with dense SVD") {
  Rng rng(7);
  ComplexMatrix g = rng.gaussian_matrix(40, 40);
  double dense = operator_norm(g, /*dense_cutoff=*/512);
  double matfree = operator_norm(g, /*dense_cutoff=*/1);
  CHECK(matfree == doctest::Approx(dense).epsilon(1e-8));
}

TEST_CASE("spectrum of normal matrices") {
  auto sp = spectrum_normal(diag2(Complex(1, 0), Complex(0, 1)));
  REQUIRE(sp.size() == 2);
  CHECK(std::abs(sp[0] - Complex(0, 1)) < 1e-10);
  CHECK(std::abs(sp[1] - Complex(1, 0)) < 1e-10);

  // cyclic shift on C^3: eigenvalues are the cube roots of unity
  // (char poly x^3 = 1)
  ComplexMatrix c3 = ComplexMatrix::Zero(3, 3);
  c3(0, 2) = 1;
  c3(1, 0) = 1;
  c3(2, 1) = 1;
  auto roots = spectrum_normal(c3);
  REQUIRE(roots.size() == 3);
  for (const auto& r : roots) {
    CHECK(std::abs(std::pow(r, 3) - Complex(1, 0)) < 1e-9);
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-10);
  }
}

TEST_CASE("rotation unitary has spectrum {e^{ia}, e^{-ia}}") {
  double alpha = 0.7;
  ComplexMatrix w(2, 2);
  w << std::cos(alpha), std::sin(alpha), -std::sin(alpha), std::cos(alpha);
  auto sp = spectrum_normal(w);
  REQUIRE(sp.size() == 2);
  Complex expect1 = std::exp(Complex(0, alpha));
  Complex expect2 = std::exp(Complex(0, -alpha));
  double d = std::min(std::abs(sp[0] - expect1) + std::abs(sp[1] - expect2),
                      std::abs(sp[0] - expect2) + std::abs(sp[1] - expect1));
  CHECK(d < 1e-10);
}

TEST_CASE("spectrum_normal rejects non-normal input") {
  ComplexMatrix j(2, 2);
  j << 1, 1, 0, 1;  // Jordan block
  CHECK_THROWS_AS(spectrum_normal(j), InputError);
}

TEST_CASE("hermitian functional calculus") {
  CHECK(operator_norm(hermitian_function(ComplexMatrix::Identity(4, 4),
                                         ScalarFn::Sqrt) -
                      ComplexMatrix::Identity(4, 4)) < 1e-12);

  ComplexMatrix d = diag2(4, 9);
  ComplexMatrix r = hermitian_function(d, ScalarFn::InvSqrt);
  CHECK(std::abs(r(0, 0) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(r(1, 1) - Complex(1.0 / 3.0, 0)) < 1e-12);

  CHECK_THROWS_AS(hermitian_function(diag2(1, -1), ScalarFn::InvSqrt),
                  InputError);
}

TEST_CASE("log_branch honors the branch cut contract") {
  const double pi = std::numbers::pi;
  double eps = 1e-3;
  Complex lam = std::exp(Complex(0, pi - eps));
  ComplexMatrix u = diag2(1, lam);
  ComplexMatrix h = log_branch(u, pi);
  CHECK(is_hermitian(h, 1e-9));
  CHECK(operator_norm(exp_i_t(h, 1.0) - u) < 1e-8);
  // spectrum of h within (-pi, pi)
  auto ed = hermitian_eigen(h);
  CHECK(ed.eigenvalues.minCoeff() > -pi);
  CHECK(ed.eigenvalues.maxCoeff() < pi);

  // eigenvalue exactly at the branch point: error naming the eigenvalue
  ComplexMatrix bad = diag2(1, std::exp(Complex(0, pi)));
  CHECK_THROWS_AS(log_branch(bad, pi), ConstructionError);
}

TEST_CASE("polar partial isometry: x = p collapses") {
  Rng rng(12);
  ComplexMatrix p = rng.projection(5, 2);
  auto out = polar_partial_isometry(p, p);
  CHECK(out.delta < 1e-10);
  CHECK(operator_norm(out.v - p) < 1e-7);
  CHECK(operator_norm(out.v.adjoint() * out.v - p) < 1e-8);
}

TEST_CASE("polar partial isometry: positive scalar saturates the bound") {
  // x = t, p = 1 in one dimension: ||v - x|| = 1 - t and
  // delta = 1 - t^2, so 1 - sqrt(1 - delta) = 1 - t exactly.
  for (double t : {0.2, 0.5, 0.9}) {
    ComplexMatrix x(1, 1), p(1, 1);
    x(0, 0) = t;
    p(0, 0) = 1;
    auto out = polar_partial_isometry(x, p);
    CHECK(out.delta == doctest::Approx(1 - t * t).epsilon(1e-12));
    double dist = operator_norm(out.v - x);
    CHECK(dist == doctest::Approx(1 - t).epsilon(1e-10));
    CHECK(dist == doctest::Approx(out.bound).epsilon(1e-10));
  }
}

TEST_CASE("polar partial isometry: random contraction with delta near 0.3") {
  Rng rng(99);
  // engineered: x = u * d with d close to identity
  ComplexMatrix u = rng.haar_unitary(4);
  Eigen::VectorXd d(4);
  d << 1.0, 0.95, 0.9, std::sqrt(1 - 0.3);  // delta = 0.3 via smallest
  ComplexMatrix x = u * d.cast<Complex>().asDiagonal();
  ComplexMatrix p = ComplexMatrix::Identity(4, 4);
  auto out = polar_partial_isometry(x, p);
  CHECK(out.delta == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(operator_norm(out.v - x) <= 1 - std::sqrt(0.7) + 1e-9);
}

TEST_CASE("polar partial isometry rejects delta >= 1") {
  ComplexMatrix x = ComplexMatrix::Zero(3, 3);
  ComplexMatrix p = ComplexMatrix::Identity(3, 3);
  CHECK_THROWS_AS(polar_partial_isometry(x, p), InputError);
}

// Lemma 0.1 inequality as a property over random instances.
TEST_CASE("property: ||v - x|| <= 1 - sqrt(1 - delta) <= delta") {
  const int kInstances = 1000;
  int done = 0;
  for (int i = 0; done < kInstances; ++i) {
    REQUIRE(i < 3 * kInstances);
    Rng rng(Rng::child_seed(424242, i));
    int n = 2 + static_cast<int>(rng.integer(15));  // dims <= 16
    int rank = 1 + static_cast<int>(rng.integer(n));
    ComplexMatrix p = rng.projection(n, rank);
    // x supported on p with x*x close to p
    ComplexMatrix noise = 0.2 * rng.gaussian_matrix(n, n) / std::sqrt(n);
    ComplexMatrix x = (rng.haar_unitary(n) + noise) * p;
    double delta = operator_norm(x.adjoint() * x - p);
    if (delta >= 0.999) continue;
    auto out = polar_partial_isometry(x, p);
    double dist = operator_norm(out.v - x);
    CHECK(dist <= out.bound + 1e-9);
    CHECK(out.bound <= delta + 1e-9);
    CHECK(operator_norm(out.v.adjoint() * out.v - p) < 1e-7);
    ++done;
  }
}

TEST_CASE("property: operator norm is unitarily invariant") {
  for (int i = 0; i < 25; ++i) {
    Rng rng(Rng::child_seed(7001, i));
    int n = 2 + static_cast<int>(rng.integer(7));
    ComplexMatrix m = rng.gaussian_matrix(n, n);
    ComplexMatrix u = rng.haar_unitary(n);
    ComplexMatrix v = rng.haar_unitary(n);
    CHECK(operator_norm(u * m * v) ==
          doctest::Approx(operator_norm(m)).epsilon(1e-9));
  }
}

TEST_CASE("property: spectra of unitaries sit on the circle") {
  for (int i = 0; i < 25; ++i) {
    Rng rng(Rng::child_seed(7002, i));
    int n = 2 + static_cast<int>(rng.integer(7));
    auto sp = spectrum_normal(rng.haar_unitary(n));
    for (const auto& lam : sp) CHECK(std::abs(std::abs(lam) - 1.0) < 1e-9);
  }
}
