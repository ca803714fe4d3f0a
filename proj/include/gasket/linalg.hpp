#ifndef GASKET_LINALG_HPP
#define GASKET_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "gasket/errors.hpp"
#include "gasket/matrix.hpp"
#include "gasket/scalar.hpp"

namespace gasket {

/// Dense LU with row pivoting. Pivot choice follows the scalar mode:
/// largest |entry| for floats, first nonzero for exact rationals (any
/// nonzero rational pivot is exact, so magnitude is irrelevant).
template <typename T>
class LuFactorization {
public:
  explicit LuFactorization(Matrix<T> a) : lu_(std::move(a)) {
    if (!lu_.is_square())
      throw malformed_input("LU: matrix must be square");
    const std::size_t n = lu_.rows();
    perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t p = pick_pivot(col);
      if (p == n) {
        singular_ = true;
        return;
      }
      if (p != col) {
        swap_rows(p, col);
        odd_swaps_ = !odd_swaps_;
      }
      const T& pivot = lu_(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (is_entry_zero(lu_(r, col))) {
          lu_(r, col) = T(0);
          continue;
        }
        T factor = lu_(r, col) / pivot;
        lu_(r, col) = factor;  // L strictly below the diagonal
        for (std::size_t c = col + 1; c < n; ++c)
          lu_(r, c) -= factor * lu_(col, c);
      }
    }
  }

  bool singular() const { return singular_; }

  T determinant() const {
    if (singular_) return T(0);
    T det = odd_swaps_ ? T(-1) : T(1);
    for (std::size_t i = 0; i < lu_.rows(); ++i) det *= lu_(i, i);
    return det;
  }

  /// Solves A x = b.
  std::vector<T> solve(const std::vector<T>& b) const {
    Matrix<T> rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    Matrix<T> x = solve(rhs);
    std::vector<T> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = x(i, 0);
    return out;
  }

  /// Solves A X = B column-by-column in one pass.
  Matrix<T> solve(const Matrix<T>& b) const {
    if (singular_) throw singular_system("LU solve: singular matrix");
    const std::size_t n = lu_.rows();
    if (b.rows() != n) throw malformed_input("LU solve: dimension mismatch");
    const std::size_t m = b.cols();

    Matrix<T> x(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) x(i, j) = b(perm_[i], j);

    // forward: L y = P b
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) {
        if (is_entry_zero(lu_(i, k))) continue;
        for (std::size_t j = 0; j < m; ++j) x(i, j) -= lu_(i, k) * x(k, j);
      }
    // back: U x = y
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t k = ii + 1; k < n; ++k) {
        if (is_entry_zero(lu_(ii, k))) continue;
        for (std::size_t j = 0; j < m; ++j) x(ii, j) -= lu_(ii, k) * x(k, j);
      }
      for (std::size_t j = 0; j < m; ++j) x(ii, j) /= lu_(ii, ii);
    }
    return x;
  }

private:
  static bool is_entry_zero(const T& x) {
    if constexpr (ScalarTraits<T>::exact)
      return sgn(x) == 0;
    else
      return x == 0.0;
  }

  std::size_t pick_pivot(std::size_t col) const {
    const std::size_t n = lu_.rows();
    if constexpr (ScalarTraits<T>::exact) {
      for (std::size_t r = col; r < n; ++r)
        if (!is_entry_zero(lu_(r, col))) return r;
      return n;
    } else {
      std::size_t best = n;
      double best_abs = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        double a = std::fabs(lu_(r, col));
        if (a > best_abs) {
          best_abs = a;
          best = r;
        }
      }
      return best;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < lu_.cols(); ++c)
      std::swap(lu_(a, c), lu_(b, c));
    std::swap(perm_[a], perm_[b]);
  }

  Matrix<T> lu_;
  std::vector<std::size_t> perm_;
  bool odd_swaps_ = false;
  bool singular_ = false;
};

template <typename T>
T determinant(const Matrix<T>& a) {
  return LuFactorization<T>(a).determinant();
}

/// Nonzero kernel vector of a square matrix, scaled so its first nonzero
/// entry is 1; nullopt when the matrix is invertible. Float mode treats
/// pivot candidates below pivot_tol as zero.
template <typename T>
std::optional<std::vector<T>> kernel_vector(Matrix<T> a,
                                            double pivot_tol = 1e-12) {
  if (!a.is_square()) throw malformed_input("kernel_vector: square input required");
  const std::size_t n = a.rows();
  std::vector<std::size_t> pivot_row_of_col(n, n);  // n = free column
  std::size_t next_row = 0;

  for (std::size_t col = 0; col < n && next_row < n; ++col) {
    std::size_t p = n;
    if constexpr (ScalarTraits<T>::exact) {
      for (std::size_t r = next_row; r < n; ++r)
        if (sgn(a(r, col)) != 0) { p = r; break; }
    } else {
      double best = pivot_tol;
      for (std::size_t r = next_row; r < n; ++r)
        if (std::fabs(a(r, col)) > best) { best = std::fabs(a(r, col)); p = r; }
    }
    if (p == n) continue;  // free column
    if (p != next_row)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(next_row, c));

    T inv_pivot = T(1) / a(next_row, col);
    for (std::size_t c = 0; c < n; ++c) a(next_row, c) *= inv_pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == next_row) continue;
      T f = a(r, col);
      if (ScalarTraits<T>::is_zero(f, 0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(next_row, c);
    }
    pivot_row_of_col[col] = next_row;
    ++next_row;
  }

  std::size_t free_col = n;
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_row_of_col[col] == n) { free_col = col; break; }
  if (free_col == n) return std::nullopt;

  std::vector<T> x(n, T(0));
  x[free_col] = T(1);
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] == n) continue;
    x[col] = -a(pivot_row_of_col[col], free_col);
  }
  // normalize: first nonzero entry becomes 1
  for (std::size_t i = 0; i < n; ++i) {
    if (!ScalarTraits<T>::is_zero(x[i], 0.0)) {
      T s = T(1) / x[i];
      for (std::size_t j = 0; j < n; ++j) x[j] *= s;
      break;
    }
  }
  return x;
}

/// Eigen decomposition of a small symmetric matrix by cyclic Jacobi.
/// Eigenvalues ascending; eigenvectors(i, k) is component i of the k-th.
struct SymmetricEigen {
  std::vector<double> eigenvalues;
  Matrix<double> eigenvectors;
};

inline SymmetricEigen symmetric_eigen(Matrix<double> a) {
  if (!a.is_square()) throw malformed_input("symmetric_eigen: square input required");
  const std::size_t n = a.rows();
  Matrix<double> v = Matrix<double>::identity(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30) break;

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix<double>(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Singular values of a square matrix (sqrt of eigenvalues of A^t A,
/// clamped at 0), ascending.
inline std::vector<double> singular_values(const Matrix<double>& a) {
  SymmetricEigen e = symmetric_eigen(a.transpose() * a);
  std::vector<double> sv(e.eigenvalues.size());
  for (std::size_t i = 0; i < sv.size(); ++i)
    sv[i] = std::sqrt(std::max(0.0, e.eigenvalues[i]));
  return sv;
}

/// Lower bound on the largest eigenvalue of a symmetric matrix via
/// shifted power iteration (Rayleigh quotients never exceed the true
/// maximum, so estimate > bound certifies a violation).
inline double symmetric_max_eigenvalue_estimate(const Matrix<double>& a,
                                                int iterations = 200) {
  const std::size_t n = a.rows();
  if (n == 0) return 0.0;

  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = std::fabs(a(i, i));
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) radius += std::fabs(a(i, j));
    shift = std::max(shift, radius);
  }

  auto rayleigh = [&](const std::vector<double>& x) {
    std::vector<double> y = a.apply(x);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += x[i] * y[i];
      den += x[i] * x[i];
    }
    return den == 0.0 ? 0.0 : num / den;
  };

  // deterministic quasi-random start
  std::vector<double> x(n);
  unsigned long state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < n; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    x[i] = 0.5 + static_cast<double>((state >> 16) % 1000000) * 1e-7;
  }
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> y = a.apply(x);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += shift * x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }

  std::vector<double> ones(n, 1.0);
  return std::max(rayleigh(x), rayleigh(ones));
}

}  // namespace gasket

#endif  // GASKET_LINALG_HPP
