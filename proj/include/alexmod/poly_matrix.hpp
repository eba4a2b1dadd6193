#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "alexmod/laurent_poly.hpp"

namespace alexmod {

/// Resource limits and cancellation shared by the long-running kernels.
struct ComputeLimits {
  /// Largest matrix dimension accepted by minors_gcd.
  std::size_t minor_cap = 8;
  /// Largest window radius tried by the stabilizing window homology.
  int window_cap = 16;
  /// Polled during long loops; when set, the kernel throws Cancelled.
  const std::atomic<bool>* cancel = nullptr;

  void poll() const;
};

/// Dense matrix of Laurent polynomials sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, int nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, LaurentPoly(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int nvars() const { return nvars_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PolyMatrix substitute(std::span<const Exponents> images, int target_nvars) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  int nvars_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Determinant of a square matrix by Bareiss elimination; the empty matrix has
/// determinant 1.
LaurentPoly determinant(const PolyMatrix& m);

/// Rank over the fraction field, by fraction-free elimination with pivots of
/// lowest total degree.
std::size_t rank_fraction_free(const PolyMatrix& m, const ComputeLimits& limits = {});

/// Normalized gcd of all r x r minors (1 when r == 0, 0 when r exceeds the
/// matrix). Throws ResourceError when the matrix is larger than
/// limits.minor_cap.
LaurentPoly minors_gcd(const PolyMatrix& m, std::size_t r, const ComputeLimits& limits = {});

}  // namespace alexmod
