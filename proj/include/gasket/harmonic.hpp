#ifndef GASKET_HARMONIC_HPP
#define GASKET_HARMONIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "gasket/cell_structure.hpp"
#include "gasket/errors.hpp"
#include "gasket/laplacian.hpp"
#include "gasket/linalg.hpp"
#include "gasket/matrix.hpp"
#include "gasket/scalar.hpp"

namespace gasket {

/// A boundary Laplacian D together with positive per-cell weights r.
/// `verified` is set only by is_harmonic_structure.
template <typename T>
struct HarmonicCandidate {
  Matrix<T> d;
  std::vector<T> r;
  bool verified = false;
};

template <typename T>
struct HarmonicityCheck {
  bool holds = false;
  T residual = T(0);  // max entrywise |Schur(H1) - D|
};

/// (D, r) is a harmonic structure iff the Schur restriction of the
/// assembled level-1 Laplacian back onto V0 equals D.
template <typename T>
HarmonicityCheck<T> is_harmonic_structure(const CellStructure& s,
                                          HarmonicCandidate<T>& cand,
                                          const Tolerances& tol = {}) {
  const LaplacianVerdict dv = validate_laplacian(cand.d, tol);
  if (!dv.ok()) {
    std::string msg = "is_harmonic_structure: D is not a Laplacian:";
    for (const auto& viol : dv.violations) msg += " [" + viol + "]";
    throw malformed_input(msg);
  }

  const Matrix<T> h1 = assemble_h1(s, cand.d, cand.r);
  const Matrix<T> schur = schur_restriction(h1, s.boundary_vertices);

  HarmonicityCheck<T> out;
  out.residual = schur.max_abs_diff(cand.d);
  out.holds = ScalarTraits<T>::is_zero(out.residual, tol.entry);
  cand.verified = out.holds;
  return out;
}

/// Result of a proportionality solve. When `proportional` is false no
/// homogeneous (resp. orbit-scaled) harmonic structure exists for this D;
/// `schur` carries the offending restriction for inspection.
template <typename T>
struct RatioSolve {
  bool proportional = false;
  T ratio = T(0);
  Matrix<T> schur;
};

namespace detail {

/// factor lambda with S = lambda * D entrywise, if it exists.
template <typename T>
std::optional<T> proportionality_factor(const Matrix<T>& schur,
                                        const Matrix<T>& d, double tol_entry) {
  std::size_t ri = 0, rj = 0;
  bool found = false;
  for (std::size_t i = 0; i < d.rows() && !found; ++i)
    for (std::size_t j = 0; j < d.cols() && !found; ++j)
      if (!ScalarTraits<T>::is_zero(d(i, j), tol_entry)) {
        ri = i;
        rj = j;
        found = true;
      }
  if (!found) return std::nullopt;

  const T lambda = schur(ri, rj) / d(ri, rj);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!ScalarTraits<T>::eq(schur(i, j), lambda * d(i, j), tol_entry))
        return std::nullopt;
  return lambda;
}

}  // namespace detail

/// Looks for r* with (D, (r*, ..., r*)) a harmonic structure. With unit
/// weights write S = Schur(H1(1)); since H1(r* . 1) = r*^{-1} H1(1) and
/// the Schur complement scales linearly, the condition S = r* . D pins r*
/// whenever S is proportional to D.
template <typename T>
RatioSolve<T> solve_homogeneous_ratio(const CellStructure& s,
                                      const Matrix<T>& d,
                                      const Tolerances& tol = {}) {
  const LaplacianVerdict dv = validate_laplacian(d, tol);
  if (!dv.ok())
    throw malformed_input("solve_homogeneous_ratio: D is not a Laplacian");

  std::vector<T> unit(s.cells.size(), T(1));
  const Matrix<T> h1 = assemble_h1(s, d, unit);

  RatioSolve<T> out;
  out.schur = schur_restriction(h1, s.boundary_vertices);
  if (auto lambda = detail::proportionality_factor(out.schur, d, tol.entry)) {
    out.proportional = true;
    out.ratio = *lambda;
  }
  return out;
}

template <typename T>
struct OrbitScaleSolve {
  bool proportional = false;
  T scale = T(0);       // t with r = t . rho
  std::vector<T> r;     // per-cell weights when proportional
  Matrix<T> schur;      // Schur(H1(rho))
};

/// Non-homogeneous harmonic structures from orbit-constant weight
/// profiles: with rho constant on each symmetry orbit, Schur(H1(rho)) is
/// again proportional to the symmetric D, and r = t . rho with t the
/// proportionality factor verifies exactly.
template <typename T>
OrbitScaleSolve<T> solve_orbit_scale(const CellStructure& s,
                                     const std::vector<std::vector<int>>& orbits,
                                     const Matrix<T>& d,
                                     const std::vector<T>& orbit_weights,
                                     const Tolerances& tol = {}) {
  if (orbit_weights.size() != orbits.size())
    throw malformed_input("solve_orbit_scale: need one weight per orbit");
  for (const T& w : orbit_weights)
    if (!(w > T(0)))
      throw invalid_parameter("solve_orbit_scale: orbit weights must satisfy r_i > 0");

  std::vector<T> rho(s.cells.size(), T(0));
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int cell : orbits[o]) rho[cell] = orbit_weights[o];
  for (const T& w : rho)
    if (!(w > T(0)))
      throw malformed_input("solve_orbit_scale: orbits do not cover all cells");

  const Matrix<T> h1 = assemble_h1(s, d, rho);

  OrbitScaleSolve<T> out;
  out.schur = schur_restriction(h1, s.boundary_vertices);
  if (auto lambda = detail::proportionality_factor(out.schur, d, tol.entry)) {
    out.proportional = true;
    out.scale = *lambda;
    out.r = rho;
    for (T& w : out.r) w *= out.scale;
  }
  return out;
}

/// Per-cell harmonic extension matrices: row = cell corner position,
/// column = boundary position, so h|_{F_i V0} = A_i h|_{V0} for every
/// solution of the interior equation. Harmonicity of (D, r) is not
/// required; the matrices exist for any valid level-1 network.
template <typename T>
std::vector<Matrix<T>> extension_matrices(const CellStructure& s,
                                          const HarmonicCandidate<T>& cand) {
  const Matrix<T> h1 = assemble_h1(s, cand.d, cand.r);
  const InteriorSolve<T> is = interior_solve(h1, s.boundary_vertices);
  const std::size_t k = static_cast<std::size_t>(s.boundary_size);

  std::vector<int> boundary_pos(s.vertex_count, -1);
  for (std::size_t j = 0; j < is.boundary.size(); ++j)
    boundary_pos[is.boundary[j]] = static_cast<int>(j);

  std::vector<Matrix<T>> out;
  out.reserve(s.cells.size());
  for (const auto& cell : s.cells) {
    Matrix<T> a(k, k);
    for (std::size_t pos = 0; pos < k; ++pos) {
      const int vertex = cell[pos];
      if (boundary_pos[vertex] >= 0) {
        a(pos, boundary_pos[vertex]) = T(1);
      } else {
        const int row = is.interior_index[vertex];
        for (std::size_t j = 0; j < k; ++j) a(pos, j) = -is.w(row, j);
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

/// Exact mode: per-cell determinant, degenerate iff some det is 0, with
/// an exact kernel witness. Float mode: per-cell minimum singular value,
/// degenerate iff any falls below the floor.
template <typename T>
struct NondegeneracyReport {
  std::vector<T> cell_metric;  // det (exact) or min singular value (float)
  bool degenerate = false;
  std::optional<int> witness_cell;
  std::vector<T> witness_kernel;  // nonempty iff degenerate

  const char* verdict() const { return degenerate ? "degenerate" : "nondegenerate"; }
  static const char* mode() { return ScalarTraits<T>::mode_name(); }

  /// Smallest |det| resp. smallest singular value across cells.
  T min_metric() const {
    T best = ScalarTraits<T>::abs(cell_metric.at(0));
    for (const T& x : cell_metric) {
      T a = ScalarTraits<T>::abs(x);
      if (a < best) best = a;
    }
    return best;
  }
};

template <typename T>
NondegeneracyReport<T> nondegeneracy_report(const std::vector<Matrix<T>>& matrices,
                                            const Tolerances& tol = {}) {
  NondegeneracyReport<T> out;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Matrix<T>& a = matrices[i];
    bool cell_degenerate = false;
    if constexpr (ScalarTraits<T>::exact) {
      T det = determinant(a);
      cell_degenerate = sgn(det) == 0;
      out.cell_metric.push_back(std::move(det));
    } else {
      std::vector<double> sv = singular_values(a);
      cell_degenerate = sv.front() <= tol.sv_floor;
      out.cell_metric.push_back(sv.front());
    }
    if (cell_degenerate && !out.degenerate) {
      out.degenerate = true;
      out.witness_cell = static_cast<int>(i);
      if constexpr (ScalarTraits<T>::exact) {
        auto kernel = kernel_vector(a);
        if (kernel) out.witness_kernel = std::move(*kernel);
      } else {
        // least-singular direction of A^t A
        SymmetricEigen e = symmetric_eigen(a.transpose() * a);
        std::vector<double> k(a.cols());
        for (std::size_t r = 0; r < a.cols(); ++r) k[r] = e.eigenvectors(r, 0);
        for (double& x : k)
          if (std::fabs(x) < 1e-14) x = 0.0;
        for (std::size_t r = 0; r < k.size(); ++r)
          if (k[r] != 0.0) {
            double scale = 1.0 / k[r];
            for (double& x : k) x *= scale;
            break;
          }
        out.witness_kernel = std::move(k);
      }
    }
  }
  return out;
}

/// Cells on which v is constant, with the constant. Empty for every
/// nonconstant solution of the interior equation on SG_n; nonempty lists
/// witness a degenerate structure.
template <typename T>
std::vector<std::pair<int, T>> check_cell_constancy(const CellStructure& s,
                                                    const std::vector<T>& v,
                                                    const Tolerances& tol = {}) {
  if (v.size() != static_cast<std::size_t>(s.vertex_count))
    throw malformed_input("check_cell_constancy: value vector length mismatch");
  std::vector<std::pair<int, T>> out;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const auto& cell = s.cells[i];
    bool constant = true;
    for (std::size_t j = 1; j < cell.size() && constant; ++j)
      constant = ScalarTraits<T>::eq(v[cell[j]], v[cell[0]], tol.level_set);
    if (constant) out.push_back({static_cast<int>(i), v[cell[0]]});
  }
  return out;
}

/// Self-similar evaluation: A_{i_m} ... A_{i_1} applied to the boundary
/// values for address (i_1, ..., i_m); the empty address is the identity.
template <typename T>
std::vector<T> evaluate_at_address(const std::vector<Matrix<T>>& matrices,
                                   const std::vector<int>& address,
                                   const std::vector<T>& boundary_values) {
  std::vector<T> x = boundary_values;
  for (int id : address) {
    if (id < 0 || static_cast<std::size_t>(id) >= matrices.size())
      throw invalid_address("evaluate_at_address: cell id " + std::to_string(id) +
                            " out of range");
    x = matrices[id].apply(x);
  }
  return x;
}

}  // namespace gasket

#endif  // GASKET_HARMONIC_HPP
