#pragma once

#include <cstdint>
#include <random>

#include "o2est/matrix.hpp"

namespace o2est {

// Deterministic, portable random matrix source.  Gaussians come from a
// hand-rolled Box-Muller on top of mt19937_64 so that identical seeds give
// identical streams regardless of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();                   // [0, 1)
  double gaussian();                  // standard normal
  Complex cgaussian();                // complex standard normal
  std::uint64_t integer(std::uint64_t bound);  // [0, bound)

  ComplexMatrix gaussian_matrix(int rows, int cols);
  /// Haar-distributed unitary via QR of a Gaussian matrix with phase fix.
  ComplexMatrix haar_unitary(int n);
  /// Hermitian with spectrum in [0, 1] and top eigenvalue exactly 1.
  ComplexMatrix positive_contraction(int n);
  /// Random orthogonal projection of the given rank.
  ComplexMatrix projection(int n, int rank);
  /// Random rectangular isometry (n x k, s*s = 1_k).
  ComplexMatrix isometry(int n, int k);
  ComplexVector unit_vector(int n);

  /// Derive an independent child stream; deterministic in (seed, i).
  static std::uint64_t child_seed(std::uint64_t master, std::uint64_t i);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace o2est
