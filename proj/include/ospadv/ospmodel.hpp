#pragma once

#include <bitset>
#include <cstddef>
#include <string>
#include <vector>

#include "ospadv/linalg.hpp"

namespace ospadv {

/// Adversary weight vector: gamma[i-1] is the weight given to input pairs
/// at Hamming distance 2i. Entries may be negative (the negative adversary
/// places no sign restriction).
struct AdversaryWeights {
  std::size_t n = 0;
  std::vector<double> gamma;
};

/// The 2n cyclic rotations of the string 1^n 0^n, in rotation order.
/// Input k has ones at bit positions k+1 .. k+n (1-based, wrapping mod 2n).
/// This is the brute-force test path; bitmask storage caps it at n <= 64.
class OspInstance {
public:
  explicit OspInstance(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t count() const { return 2 * n_; }

  /// Bit `pos` (1-based, 1..2n) of input `k`.
  bool bit(std::size_t k, std::size_t pos) const {
    return masks_[k][pos - 1];
  }

  std::size_t hamming(std::size_t a, std::size_t b) const {
    return (masks_[a] ^ masks_[b]).count();
  }

  /// The input as a bit string, most significant query position first.
  std::string to_string(std::size_t k) const;

private:
  std::size_t n_;
  std::vector<std::bitset<128>> masks_;
};

OspInstance inputs(std::size_t n);

/// Full 2n x 2n adversary matrix: Gamma[x][y] = gamma_{d/2} where d is the
/// Hamming distance between inputs x and y, zero on the diagonal.
SymMatrix build_gamma(const AdversaryWeights& w);

/// 0/1 indicator of input pairs that differ at query position i (1..2n).
SymMatrix d_mask(std::size_t n, std::size_t i);

/// gamma_n + 2 sum_{i<n} gamma_i: the uniform-vector eigenvalue of Gamma.
double adv_objective(const AdversaryWeights& w);

/// Residuals of the three symmetry-reduction facts, measured on the fully
/// assembled 2n x 2n matrices:
///   (a) the uniform vector is an eigenvector of Gamma with eigenvalue
///       adv_objective(w),
///   (b) all masked norms ||Gamma o D_i|| agree,
///   (c) ||Gamma o D_2n|| equals the reduced Toeplitz block norm.
struct SymmetryReport {
  double uniform_eigen_residual = 0;
  double norm_spread = 0;
  double block_residual = 0;
  double tol = 0;

  bool pass() const {
    return uniform_eigen_residual <= tol && norm_spread <= tol &&
           block_residual <= tol;
  }
};

SymmetryReport verify_symmetry(const AdversaryWeights& w, double tol);

/// The reduced block: Toeplitz(gamma_n, ..., gamma_1).
SymMatrix reduced_block(const AdversaryWeights& w);

}  // namespace ospadv
