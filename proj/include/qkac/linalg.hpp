#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qkac/error.hpp"
#include "qkac/laurent.hpp"
#include "qkac/qarith.hpp"
#include "qkac/ratq.hpp"

namespace qkac {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace linalg_detail {

inline bool is_zero(const LaurentInt& x) { return x.is_zero(); }
inline bool is_zero(const RatQ& x) { return x.is_zero(); }
inline bool is_zero(const qarith::FpLaurent& x) { return x.is_zero(); }
inline bool is_zero(const qarith::CyclotomicNumber& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

inline LaurentInt exact_div(const LaurentInt& a, const LaurentInt& b) { return a.divide_exact(b); }
inline qarith::FpLaurent exact_div(const qarith::FpLaurent& a, const qarith::FpLaurent& b) {
  return a.divide_exact(b);
}
inline RatQ exact_div(const RatQ& a, const RatQ& b) { return a / b; }

inline RatQ inverse(const RatQ& x) { return x.inverse(); }
inline qarith::CyclotomicNumber inverse(const qarith::CyclotomicNumber& x) { return x.inverse(); }
inline mpq_class inverse(const mpq_class& x) {
  mpq_class r = 1 / x;
  r.canonicalize();
  return r;
}

inline void canonical(mpq_class& x) { x.canonicalize(); }
template <class T>
void canonical(T&) {}

}  // namespace linalg_detail

struct EchelonSummary {
  std::size_t rank = 0;
  /// Row swaps performed, modulo 2.
  bool odd_permutation = false;
};

/// Fraction-free (Bareiss) elimination over an integral domain with exact
/// division, in place. After the call the last pivot of a full-rank square
/// matrix sits at m(n-1, n-1) and equals +-det.
template <class T>
EchelonSummary bareiss_echelon(Matrix<T>& m) {
  using linalg_detail::exact_div;
  using linalg_detail::is_zero;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::optional<T> previous;
  EchelonSummary summary;
  std::size_t& rank = summary.rank;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      m.swap_rows(pivot, rank);
      summary.odd_permutation = !summary.odd_permutation;
    }
    const T lead = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T factor = m(r, c);
      for (std::size_t k = c + 1; k < cols; ++k) {
        T value = lead * m(r, k) - factor * m(rank, k);
        m(r, k) = previous ? exact_div(value, *previous) : std::move(value);
      }
      m(r, c) = T{};
    }
    previous = lead;
    ++rank;
  }
  return summary;
}

/// Determinant of a square matrix over Z[q, q^-1] (or any domain with a unit
/// constructor and exact division).
template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  const EchelonSummary summary = bareiss_echelon(m);
  if (summary.rank < n) return T{};
  T det = m(n - 1, n - 1);
  return summary.odd_permutation ? T{} - det : det;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return bareiss_echelon(m).rank;
}

/// Reduced row echelon form over a field, in place. Returns pivot columns.
template <class F>
std::vector<std::size_t> field_rref(Matrix<F>& m) {
  using linalg_detail::inverse;
  using linalg_detail::is_zero;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, row);
    const F inv = inverse(m(row, c));
    for (std::size_t k = c; k < m.cols(); ++k) {
      m(row, k) = m(row, k) * inv;
      linalg_detail::canonical(m(row, k));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      const F factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        m(r, k) = m(r, k) - factor * m(row, k);
        linalg_detail::canonical(m(r, k));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t field_rank(Matrix<F> m) {
  return field_rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> field_kernel(Matrix<F> m) {
  const std::vector<std::size_t> pivots = field_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F{});
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = F{} - m(r, free);
      linalg_detail::canonical(v[pivots[r]]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix over a field; nullopt when singular.
template <class F>
std::optional<Matrix<F>> field_inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = F(1);
  }
  const auto pivots = field_rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

}  // namespace qkac
