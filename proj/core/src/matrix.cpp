#include "o2est/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace o2est {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix d = m.adjoint() * m;
  d.diagonal().array() -= 1.0;
  return d.norm() <= tol * std::sqrt(static_cast<double>(m.rows()));
}

bool is_projection(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  return (m * m - m).norm() <= tol * std::max(1.0, m.norm());
}

double isometry_defect(const ComplexMatrix& s) {
  ComplexMatrix g = s.adjoint() * s;
  g.diagonal().array() -= 1.0;
  return operator_norm(g);
}

double operator_norm(const ComplexMatrix& m, int dense_cutoff) {
  if (m.size() == 0) throw InputError("operator_norm: empty matrix");
  if (!all_finite(m)) throw InputError("operator_norm: non-finite entry");
  const Eigen::Index n = std::max(m.rows(), m.cols());
  if (n <= dense_cutoff) {
    return m.jacobiSvd().singularValues()(0);
  }
  auto apply = [&m](const ComplexVector& v) -> ComplexVector { return m * v; };
  auto apply_adj = [&m](const ComplexVector& v) -> ComplexVector {
    return m.adjoint() * v;
  };
  return operator_norm_matfree(static_cast<int>(m.cols()), apply, apply_adj);
}

double operator_norm_matfree(
    int dim, const std::function<ComplexVector(const ComplexVector&)>& apply,
    const std::function<ComplexVector(const ComplexVector&)>& apply_adjoint,
    double tol, int max_iter) {
  if (dim <= 0) throw InputError("operator_norm_matfree: empty operator");
  // Deterministic start vector with no special symmetry.
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    double a = std::cos(0.7 * i + 0.3);
    double b = std::sin(1.3 * i + 0.1);
    v(i) = Complex(1.0 + 0.25 * a, 0.25 * b);
  }
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    ComplexVector w = apply_adjoint(apply(v));
    double nw = w.norm();
    if (nw == 0.0) return 0.0;
    w /= nw;
    double next = nw;  // Rayleigh estimate of sigma^2 after normalization
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, next)) {
      lambda = next;
      break;
    }
    lambda = next;
    v.swap(w);
  }
  return std::sqrt(lambda);
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) throw InputError("hermitian_eigen: empty matrix");
  if (!all_finite(m)) throw InputError("hermitian_eigen: non-finite entry");
  if (!is_hermitian(m, std::max(tol, 1e-8)))
    throw InputError("hermitian_eigen: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      (m + m.adjoint()) / 2.0);  // symmetrize away fp noise
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigen: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<Complex> spectrum_normal(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.size() == 0)
    throw InputError("spectrum_normal: square nonempty matrix required");
  if (!all_finite(m)) throw InputError("spectrum_normal: non-finite entry");
  const double scale = std::max(1.0, operator_norm(m));
  double normality = operator_norm(m * m.adjoint() - m.adjoint() * m);
  if (normality > tol * scale * scale)
    throw InputError("spectrum_normal: input is not normal");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectrum_normal: solver failed");
  std::vector<Complex> out;
  out.reserve(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Complex lambda = es.eigenvalues()(i);
    ComplexVector v = es.eigenvectors().col(i);
    double residual = (m * v - lambda * v).norm();
    if (residual > 100 * tol * scale)
      throw std::runtime_error("spectrum_normal: residual too large");
    out.push_back(lambda);
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

ComplexMatrix hermitian_function(const ComplexMatrix& m, ScalarFn f,
                                 double tol) {
  HermitianEigen ed = hermitian_eigen(m, tol);
  Eigen::VectorXd vals = ed.eigenvalues;
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    double t = vals(i);
    switch (f) {
      case ScalarFn::Sqrt:
        if (t < -tol * scale)
          throw InputError("hermitian_function: sqrt of negative spectrum");
        vals(i) = std::sqrt(std::max(0.0, t));
        break;
      case ScalarFn::InvSqrt:
        if (t <= 0.0)
          throw InputError(
              "hermitian_function: inv_sqrt needs strictly positive "
              "spectrum");
        vals(i) = 1.0 / std::sqrt(t);
        break;
    }
  }
  return ed.eigenvectors * vals.asDiagonal() * ed.eigenvectors.adjoint();
}

ComplexMatrix exp_i_t(const ComplexMatrix& m, double t, double tol) {
  HermitianEigen ed = hermitian_eigen(m, tol);
  ComplexVector phases(ed.eigenvalues.size());
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i)
    phases(i) = std::exp(Complex(0.0, t * ed.eigenvalues(i)));
  return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

ComplexMatrix log_branch(const ComplexMatrix& u, double phi, double tol) {
  if (!is_unitary(u, std::max(tol, 1e-8)))
    throw InputError("log_branch: input not unitary");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(u);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("log_branch: solver failed");
  const Eigen::Index n = u.rows();
  // Schur would be more natural, but for unitary input the eigenvector
  // matrix is close to unitary; re-orthonormalize to be safe.
  Eigen::HouseholderQR<ComplexMatrix> qr(es.eigenvectors());
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix d = q.adjoint() * u * q;  // near-diagonal in this basis

  Eigen::VectorXd angles(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex lambda = d(i, i);
    lambda /= std::abs(lambda);
    double theta = std::arg(lambda);  // in (-pi, pi]
    // shift into (phi - 2*pi, phi)
    while (theta >= phi) theta -= 2 * std::numbers::pi;
    while (theta < phi - 2 * std::numbers::pi) theta += 2 * std::numbers::pi;
    double gap = std::min(phi - theta, theta - (phi - 2 * std::numbers::pi));
    if (gap < 1e-12) {
      std::ostringstream msg;
      msg << "log_branch: eigenvalue exp(" << theta
          << "i) sits at the branch point phi=" << phi;
      throw ConstructionError(msg.str());
    }
    angles(i) = theta;
  }
  ComplexMatrix h = q * angles.cast<Complex>().asDiagonal() * q.adjoint();
  h = (h + h.adjoint()) / 2.0;
  // verify exp(ih) reproduces u
  double err = operator_norm(exp_i_t(h, 1.0) - u);
  if (err > 1e-7)
    throw std::runtime_error("log_branch: reconstruction failed, err=" +
                             std::to_string(err));
  return h;
}

PolarIsometry polar_partial_isometry(const ComplexMatrix& x,
                                     const ComplexMatrix& p, double tol) {
  if (x.rows() != p.rows() || p.rows() != p.cols())
    throw InputError("polar_partial_isometry: shape mismatch");
  if (!is_projection(p, std::max(tol, 1e-8)))
    throw InputError("polar_partial_isometry: p is not a projection");
  if (operator_norm(x * p - x) > std::max(tol, 1e-8) *
                                     std::max(1.0, operator_norm(x)))
    throw InputError("polar_partial_isometry: xp = x fails");

  ComplexMatrix xx = x.adjoint() * x;
  double delta = operator_norm(xx - p);
  if (delta >= 1.0)
    throw InputError(
        "polar_partial_isometry: ||x*x - p|| >= 1, not invertible in pAp");

  // (x*x)^(-1/2) inside the corner pAp: invert on range(p), vanish on 1-p.
  HermitianEigen pe = hermitian_eigen(p);
  // columns with eigenvalue ~1 span range(p)
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < pe.eigenvalues.size(); ++i)
    if (pe.eigenvalues(i) > 0.5) idx.push_back(i);
  ComplexMatrix basis(p.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k)
    basis.col(static_cast<Eigen::Index>(k)) = pe.eigenvectors.col(idx[k]);

  ComplexMatrix corner = basis.adjoint() * xx * basis;  // x*x in pAp
  ComplexMatrix inv_sqrt = hermitian_function(corner, ScalarFn::InvSqrt);
  ComplexMatrix v = x * basis * inv_sqrt * basis.adjoint();

  PolarIsometry out;
  out.v = v;
  out.delta = delta;
  out.bound = 1.0 - std::sqrt(1.0 - delta);
  return out;
}

}  // namespace o2est
