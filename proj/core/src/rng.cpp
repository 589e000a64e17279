#include "o2est/rng.hpp"

#include <cmath>
#include <numbers>

namespace o2est {

double Rng::uniform() {
  // 53-bit mantissa fill
  return (gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::cgaussian() {
  return Complex(gaussian(), gaussian()) / std::sqrt(2.0);
}

std::uint64_t Rng::integer(std::uint64_t bound) {
  // modulo bias is irrelevant at the bounds we use
  return bound == 0 ? 0 : gen_() % bound;
}

ComplexMatrix Rng::gaussian_matrix(int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cgaussian();
  return m;
}

ComplexMatrix Rng::haar_unitary(int n) {
  ComplexMatrix g = gaussian_matrix(n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix phases so the distribution is Haar
  for (int i = 0; i < n; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0));
  }
  return q;
}

ComplexMatrix Rng::positive_contraction(int n) {
  ComplexMatrix g = gaussian_matrix(n, n);
  ComplexMatrix h = g.adjoint() * g;
  HermitianEigen ed = hermitian_eigen(h);
  double top = ed.eigenvalues(n - 1);
  if (top <= 0) return ComplexMatrix::Identity(n, n);
  Eigen::VectorXd vals = ed.eigenvalues / top;
  return ed.eigenvectors * vals.cast<Complex>().asDiagonal() *
         ed.eigenvectors.adjoint();
}

ComplexMatrix Rng::projection(int n, int rank) {
  ComplexMatrix u = haar_unitary(n);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < rank; ++i) p += u.col(i) * u.col(i).adjoint();
  return p;
}

ComplexMatrix Rng::isometry(int n, int k) {
  ComplexMatrix u = haar_unitary(n);
  return u.leftCols(k);
}

ComplexVector Rng::unit_vector(int n) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = cgaussian();
  v.normalize();
  return v;
}

std::uint64_t Rng::child_seed(std::uint64_t master, std::uint64_t i) {
  // splitmix64 finalizer on (master, i)
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace o2est
