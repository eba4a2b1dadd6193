#include "alexmod/poly_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "alexmod/errors.hpp"

namespace alexmod {

void ComputeLimits::poll() const {
  if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled();
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size(), nvars_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

PolyMatrix PolyMatrix::substitute(std::span<const Exponents> images, int target_nvars) const {
  PolyMatrix out(rows_, cols_, target_nvars);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].substitute(images, target_nvars);
  return out;
}

namespace {

void swap_rows(PolyMatrix& a, std::size_t x, std::size_t y) {
  if (x == y) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(x, j), a(y, j));
}

void swap_cols(PolyMatrix& a, std::size_t x, std::size_t y) {
  if (x == y) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, x), a(i, y));
}

// One Bareiss step at pivot (k, k): a_ij <- (a_kk a_ij - a_ik a_kj) / prev.
void bareiss_step(PolyMatrix& a, std::size_t k, const LaurentPoly& prev) {
  const LaurentPoly& p = a(k, k);
  for (std::size_t i = k + 1; i < a.rows(); ++i) {
    for (std::size_t j = k + 1; j < a.cols(); ++j) {
      LaurentPoly v = p * a(i, j) - a(i, k) * a(k, j);
      a(i, j) = prev.is_constant() && prev.leading_coefficient() == 1 ? std::move(v)
                                                                         : divide_or_throw(v, prev);
    }
    a(i, k) = LaurentPoly(a.nvars());
  }
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.nvars(), 1);
  PolyMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(m.nvars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> piv;
    for (std::size_t i = k; i < n; ++i)
      if (!a(i, k).is_zero() && (!piv || a(i, k).term_count() < a(*piv, k).term_count())) piv = i;
    if (!piv) return LaurentPoly(m.nvars());
    if (*piv != k) {
      swap_rows(a, k, *piv);
      negate = !negate;
    }
    bareiss_step(a, k, prev);
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::size_t rank_fraction_free(const PolyMatrix& m, const ComputeLimits& limits) {
  PolyMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(m.nvars(), 1);
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t k = 0;
  for (; k < n; ++k) {
    limits.poll();
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    long best = 0;
    for (std::size_t i = k; i < a.rows(); ++i)
      for (std::size_t j = k; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) continue;
        const long score = a(i, j).total_span();
        if (!piv || score < best) {
          piv = {i, j};
          best = score;
        }
      }
    if (!piv) break;
    swap_rows(a, k, piv->first);
    swap_cols(a, k, piv->second);
    bareiss_step(a, k, prev);
    prev = a(k, k);
  }
  return k;
}

namespace {

// Advances `idx` (strictly increasing, values < n) to the next combination.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t pos = r; pos-- > 0;) {
    if (idx[pos] < n - r + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < r; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

LaurentPoly minors_gcd(const PolyMatrix& m, std::size_t r, const ComputeLimits& limits) {
  if (r == 0) return LaurentPoly::constant(m.nvars(), 1);
  if (r > std::min(m.rows(), m.cols())) return LaurentPoly(m.nvars());
  if (std::max(m.rows(), m.cols()) > limits.minor_cap)
    throw ResourceError("minor enumeration on a " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix exceeds the cap of " +
                        std::to_string(limits.minor_cap));

  LaurentPoly g(m.nvars());
  std::vector<std::size_t> rows(r);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::vector<std::size_t> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      limits.poll();
      const LaurentPoly d = determinant(m.submatrix(rows, cols));
      if (d.is_zero()) continue;
      g = poly_gcd(g, d);
      if (g.is_unit()) return g;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

}  // namespace alexmod
