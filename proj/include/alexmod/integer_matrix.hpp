#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace alexmod {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SmithDecomposition {
  /// Nonzero invariant factors d1 | d2 | ..., all positive.
  std::vector<mpz_class> invariant_factors;
  std::size_t rank = 0;

  /// Factors greater than one: the torsion chain of the cokernel.
  std::vector<mpz_class> torsion() const;
};

/// Smith form together with unimodular transforms, `left * M * right == diagonal`.
struct SmithTransforms {
  SmithDecomposition smith;
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
};

/// Invariant factors by repeated minimal-absolute-value pivoting.
SmithDecomposition integer_snf(const IntMatrix& m);

SmithTransforms integer_snf_with_transforms(const IntMatrix& m);

/// Row-style Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_rows(const IntMatrix& m);

std::string to_string(const std::vector<mpz_class>& factors);

}  // namespace alexmod
