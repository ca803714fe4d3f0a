#ifndef GASKET_LAPLACIAN_HPP
#define GASKET_LAPLACIAN_HPP

#include <queue>
#include <string>
#include <vector>

#include "gasket/cell_structure.hpp"
#include "gasket/errors.hpp"
#include "gasket/linalg.hpp"
#include "gasket/matrix.hpp"
#include "gasket/scalar.hpp"

namespace gasket {

/// Verdict of the Laplacian validator. The three defining conditions of a
/// Laplacian on a finite set are
///   (1) non-positive definite,
///   (2) kernel = constants,
///   (3) non-negative off-diagonal entries.
/// Zero row sums and a connected positive-off-diagonal support graph are
/// exactly condition (2) given (3), and together with (3) they imply (1),
/// so exact mode certifies (1) through that equivalence. Float mode
/// additionally confirms (1) with a Rayleigh eigenvalue bound.
struct LaplacianVerdict {
  bool offdiag_nonneg = false;     // condition (3)
  bool row_sums_zero = false;      // condition (2), necessity
  bool support_connected = false;  // condition (2), kernel dimension
  bool nonpositive = false;        // condition (1)
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

template <typename T>
LaplacianVerdict validate_laplacian(const Matrix<T>& m,
                                    const Tolerances& tol = {}) {
  if (!m.is_square() || m.rows() < 2)
    throw malformed_input("validate_laplacian: square matrix of dim >= 2 required");
  const double sym_tol = ScalarTraits<T>::exact ? 0.0 : tol.entry;
  if (!m.is_symmetric(sym_tol))
    throw malformed_input("validate_laplacian: matrix is not symmetric");

  const std::size_t n = m.rows();
  LaplacianVerdict v;

  v.offdiag_nonneg = true;
  for (std::size_t i = 0; i < n && v.offdiag_nonneg; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (ScalarTraits<T>::is_negative(m(i, j), tol.entry)) {
        v.offdiag_nonneg = false;
        v.violations.push_back("condition (3) offdiagonal-sign: negative entry at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
        break;
      }
    }

  v.row_sums_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    T sum(0);
    for (std::size_t j = 0; j < n; ++j) sum += m(i, j);
    if (!ScalarTraits<T>::is_zero(sum, tol.entry)) {
      v.row_sums_zero = false;
      v.violations.push_back("condition (2) kernel-constants: nonzero row sum at row " +
                             std::to_string(i));
      break;
    }
  }

  // kernel is exactly the constants iff the positive-off-diagonal support
  // graph is connected
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!bfs.empty()) {
    std::size_t p = bfs.front();
    bfs.pop();
    for (std::size_t q = 0; q < n; ++q)
      if (q != p && !seen[q] && ScalarTraits<T>::is_positive(m(p, q), tol.entry)) {
        seen[q] = 1;
        ++reached;
        bfs.push(q);
      }
  }
  v.support_connected = reached == n;
  if (!v.support_connected)
    v.violations.push_back(
        "condition (2) kernel-constants: positive-off-diagonal support graph "
        "is disconnected (kernel dimension > 1)");

  v.nonpositive = v.offdiag_nonneg && v.row_sums_zero && v.support_connected;
  if constexpr (!ScalarTraits<T>::exact) {
    const double bound = tol.entry * (1.0 + to_double(m.max_abs()));
    if (symmetric_max_eigenvalue_estimate(m) > bound) v.nonpositive = false;
  }
  if (!v.nonpositive)
    v.violations.push_back(
        "condition (1) nonpositive-definite: not certified");

  return v;
}

/// Dirichlet energy in the matrix convention E(u, v) = -u^t M v.
template <typename T>
T dirichlet_energy(const Matrix<T>& m, const std::vector<T>& u,
                   const std::vector<T>& v) {
  if (u.size() != m.rows() || v.size() != m.cols())
    throw malformed_input("dirichlet_energy: dimension mismatch");
  std::vector<T> mv = m.apply(v);
  T acc(0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * mv[i];
  return -acc;
}

/// Level-1 Laplacian: for each cell i with weight r_i, accumulates
/// r_i^{-1} D[j][l] at the global entry (cell_i[j], cell_i[l]).
template <typename T>
Matrix<T> assemble_h1(const CellStructure& s, const Matrix<T>& d,
                      const std::vector<T>& r) {
  const std::size_t k = static_cast<std::size_t>(s.boundary_size);
  if (d.rows() != k || d.cols() != k)
    throw malformed_input("assemble_h1: D must be k x k");
  if (!d.is_symmetric(ScalarTraits<T>::exact ? 0.0 : 1e-12))
    throw malformed_input("assemble_h1: D must be symmetric");
  if (r.size() != s.cells.size())
    throw malformed_input("assemble_h1: need one weight per cell");
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!(r[i] > T(0)))
      throw invalid_parameter("assemble_h1: weights must satisfy r_i > 0 (r[" +
                              std::to_string(i) + "] fails)");

  Matrix<T> h(s.vertex_count, s.vertex_count);
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const T inv = T(1) / r[i];
    const auto& cell = s.cells[i];
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        h(cell[j], cell[l]) += inv * d(j, l);
  }
  return h;
}

/// Shared elimination of the interior block. With vertices split as
/// (boundary, interior) and H = [[T, J^t], [J, X]], computes
/// W = X^{-1} J once; the Schur complement T - J^t W and every harmonic
/// extension -W u0 fall out of the same factorization.
template <typename T>
struct InteriorSolve {
  std::vector<int> boundary;
  std::vector<int> interior;        // ascending complement
  std::vector<int> interior_index;  // vertex id -> row of W, -1 on boundary
  Matrix<T> w;                      // interior x k
  Matrix<T> schur;                  // k x k
};

template <typename T>
InteriorSolve<T> interior_solve(const Matrix<T>& h,
                                const std::vector<int>& boundary) {
  if (!h.is_square()) throw malformed_input("interior_solve: square matrix required");
  const std::size_t n = h.rows();
  if (boundary.empty() || boundary.size() >= n)
    throw invalid_parameter("interior_solve: boundary must be a proper nonempty subset");

  InteriorSolve<T> out;
  out.boundary = boundary;
  out.interior_index.assign(n, -1);
  std::vector<char> is_bd(n, 0);
  for (int b : boundary) {
    if (b < 0 || static_cast<std::size_t>(b) >= n || is_bd[b])
      throw invalid_parameter("interior_solve: bad boundary vertex list");
    is_bd[b] = 1;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!is_bd[v]) {
      out.interior_index[v] = static_cast<int>(out.interior.size());
      out.interior.push_back(static_cast<int>(v));
    }

  const std::size_t k = boundary.size();
  const std::size_t m = out.interior.size();
  Matrix<T> x(m, m), j(m, k), t(k, k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      x(a, b) = h(out.interior[a], out.interior[b]);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < k; ++b)
      j(a, b) = h(out.interior[a], boundary[b]);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      t(a, b) = h(boundary[a], boundary[b]);

  LuFactorization<T> lu(std::move(x));
  if (lu.singular())
    throw singular_system(
        "interior_solve: interior block is singular (input is not a valid Laplacian)");
  out.w = lu.solve(j);
  out.schur = t - j.transpose() * out.w;
  return out;
}

/// Network reduction of H onto the given boundary: T - J^t X^{-1} J.
template <typename T>
Matrix<T> schur_restriction(const Matrix<T>& h, const std::vector<int>& boundary) {
  return interior_solve(h, boundary).schur;
}

/// Unique solution of (H1 v)|interior = 0 with prescribed boundary values.
template <typename T>
std::vector<T> harmonic_extend(const Matrix<T>& h1, const CellStructure& s,
                               const std::vector<T>& boundary_values) {
  if (h1.rows() != static_cast<std::size_t>(s.vertex_count))
    throw malformed_input("harmonic_extend: H1 dimension != vertex count");
  if (boundary_values.size() != s.boundary_vertices.size())
    throw malformed_input("harmonic_extend: need one value per boundary vertex");

  const InteriorSolve<T> is = interior_solve(h1, s.boundary_vertices);
  std::vector<T> v(s.vertex_count, T(0));
  for (std::size_t j = 0; j < boundary_values.size(); ++j)
    v[is.boundary[j]] = boundary_values[j];
  for (std::size_t i = 0; i < is.interior.size(); ++i) {
    T acc(0);
    for (std::size_t j = 0; j < boundary_values.size(); ++j)
      acc += is.w(i, j) * boundary_values[j];
    v[is.interior[i]] = -acc;
  }
  return v;
}

/// Max |(H v)(p)| over the given vertices (interior residual of (1.1)).
template <typename T>
T harmonic_residual(const Matrix<T>& h, const std::vector<T>& v,
                    const std::vector<int>& vertices) {
  std::vector<T> hv = h.apply(v);
  T worst(0);
  for (int p : vertices) {
    T a = ScalarTraits<T>::abs(hv[p]);
    if (a > worst) worst = a;
  }
  return worst;
}

/// The standard boundary Laplacian: unit conductance on every pair.
template <typename T>
Matrix<T> standard_boundary_laplacian(int k = 3) {
  Matrix<T> d(k, k, T(1));
  for (int i = 0; i < k; ++i) d(i, i) = T(1 - k);
  return d;
}

}  // namespace gasket

#endif  // GASKET_LAPLACIAN_HPP
