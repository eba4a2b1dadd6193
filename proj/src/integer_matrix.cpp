#include "alexmod/integer_matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace alexmod {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged IntMatrix initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<mpz_class> SmithDecomposition::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

// Elimination state; the transforms are only maintained when requested.
struct SmithWork {
  IntMatrix a;
  std::optional<IntMatrix> left, right;

  void swap_rows(std::size_t i, std::size_t k) {
    a.swap_rows(i, k);
    if (left) left->swap_rows(i, k);
  }
  void swap_cols(std::size_t i, std::size_t k) {
    a.swap_cols(i, k);
    if (right) right->swap_cols(i, k);
  }
  void add_row(std::size_t dst, std::size_t src, const mpz_class& q) {
    a.add_row_multiple(dst, src, q);
    if (left) left->add_row_multiple(dst, src, q);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& q) {
    a.add_col_multiple(dst, src, q);
    if (right) right->add_col_multiple(dst, src, q);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (left) left->negate_row(i);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool select_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {i, j};
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  // Clears row t and column t beyond the pivot; true when nothing remained.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const mpz_class p = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) == 0) continue;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), p.get_mpz_t());
      add_row(i, t, -q);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) == 0) continue;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), p.get_mpz_t());
      add_col(j, t, -q);
      if (a(t, j) != 0) clean = false;
    }
    return clean;
  }

  void run() {
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!select_pivot(t)) break;
      for (;;) {
        if (!clear_cross(t)) {
          // Remainders are smaller than the pivot: restart from the smallest.
          std::size_t bi = t, bj = t;
          for (std::size_t i = t; i < a.rows(); ++i)
            if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
          for (std::size_t j = t; j < a.cols(); ++j)
            if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < a.rows() && !bad_row; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a(i, j) % a(t, t) != 0) {
              bad_row = i;
              break;
            }
        if (!bad_row) break;
        add_row(t, *bad_row, 1);
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

SmithDecomposition read_diagonal(const IntMatrix& d) {
  SmithDecomposition s;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i) == 0) break;
    s.invariant_factors.push_back(d(i, i));
  }
  s.rank = s.invariant_factors.size();
  return s;
}

}  // namespace

SmithDecomposition integer_snf(const IntMatrix& m) {
  SmithWork w{m, std::nullopt, std::nullopt};
  w.run();
  return read_diagonal(w.a);
}

SmithTransforms integer_snf_with_transforms(const IntMatrix& m) {
  SmithWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  w.run();
  return {read_diagonal(w.a), w.a, std::move(*w.left), std::move(*w.right)};
}

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // Euclid down column c until a single nonzero remains at row r.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
      if (!best) break;
      a.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        a.add_row_multiple(i, r, -q);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      a.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

std::string to_string(const std::vector<mpz_class>& factors) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? ", " : "") << factors[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace alexmod
