#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ospadv {

/// Dense real symmetric matrix. All writes go through set(), which mirrors
/// the entry across the diagonal, so the stored matrix is symmetric by
/// construction (asymmetric input is never "fixed up" after the fact).
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order);

  std::size_t order() const { return order_; }

  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * order_ + j];
  }

  /// Sets entries (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double v) {
    a_[i * order_ + j] = v;
    a_[j * order_ + i] = v;
  }

  void add(std::size_t i, std::size_t j, double v) {
    a_[i * order_ + j] += v;
    if (i != j) a_[j * order_ + i] += v;
  }

  const std::vector<double>& data() const { return a_; }

  double trace() const;
  double frobenius() const;

  /// y = M x
  std::vector<double> apply(std::span<const double> x) const;

private:
  std::size_t order_ = 0;
  std::vector<double> a_;
};

/// Entrywise (Hadamard) product; operands must have equal order.
SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b);

/// Full eigendecomposition of a symmetric matrix.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  // Column-major orthonormal basis; column k pairs with eigenvalues[k].
  std::optional<std::vector<double>> eigenvectors;
  std::size_t order = 0;

  double vector_entry(std::size_t k, std::size_t i) const {
    return (*eigenvectors)[k * order + i];
  }
};

struct InertiaCounts {
  std::size_t n_pos = 0;
  std::size_t n_zero = 0;
  std::size_t n_neg = 0;
  bool operator==(const InertiaCounts&) const = default;
};

/// Symmetric Toeplitz matrix with the given first row; T[i][j] =
/// first_row[|i-j|]. Rejects empty input.
SymMatrix sym_toeplitz(std::span<const double> first_row);

/// Half Hilbert matrix Z_m: the Hankel matrix with Z[i][j] = 1/(i+j+1)
/// on and above the anti-diagonal (0-based i+j+1 <= m) and 0 below it.
SymMatrix half_hilbert(std::size_t m);

/// Cyclic Jacobi eigensolver. Sweeps until the off-diagonal Frobenius
/// mass drops below 1e-13 * ||M||_F (at most 60 sweeps, which is far
/// more than the quadratically convergent tail ever needs).
Spectrum eig_sym(const SymMatrix& m, bool want_vectors = false);

/// max |eigenvalue|
double spectral_norm(const SymMatrix& m);

/// sum |eigenvalue|
double trace_norm(const SymMatrix& m);

/// Sum of the i-th superdiagonal (i = 0 gives the trace). i must be < order.
double diag_sum(const SymMatrix& m, std::size_t i);

/// Eigenvalue sign counts relative to zero_tol * max(1, spectral_norm(m)).
InertiaCounts inertia(const SymMatrix& m, double zero_tol = 1e-9);

}  // namespace ospadv
