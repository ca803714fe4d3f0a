#ifndef GASKET_IO_HPP
#define GASKET_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gasket/cell_structure.hpp"
#include "gasket/errors.hpp"
#include "gasket/harmonic.hpp"
#include "gasket/matrix.hpp"
#include "gasket/scalar.hpp"

namespace gasket {

using nlohmann::json;

// ---------------------------------------------------------------------
// cell structures: {name, k, vertex_count, boundary, cells, coords?}
// ---------------------------------------------------------------------

json structure_to_json(const CellStructure& s);
CellStructure structure_from_json(const json& j);  // validates invariants

// ---------------------------------------------------------------------
// matrices and weight vectors
// ---------------------------------------------------------------------

/// {"dim": n, "entries": [...]} row-major; exact entries as canonical
/// "p/q" strings, float entries as shortest round-trip numbers.
template <typename T>
json matrix_to_json(const Matrix<T>& m) {
  if (!m.is_square()) throw malformed_input("matrix_to_json: square matrices only");
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (ScalarTraits<T>::exact)
        entries.push_back(rational_to_string(m(i, j)));
      else
        entries.push_back(m(i, j));
    }
  return json{{"dim", m.rows()}, {"entries", entries}};
}

template <typename T>
T scalar_from_json(const json& x) {
  if (x.is_string()) return ScalarTraits<T>::parse(x.get<std::string>());
  if (x.is_number_integer()) return T(static_cast<long>(x.get<long long>()));
  if (x.is_number()) {
    if constexpr (ScalarTraits<T>::exact) {
      // route through the shortest decimal so exact mode reads the same
      // rational a human reading the file would
      return parse_rational(shortest_double_string(x.get<double>()));
    } else {
      return x.get<double>();
    }
  }
  throw malformed_input("scalar_from_json: expected string or number");
}

template <typename T>
Matrix<T> matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw malformed_input("matrix_from_json: need {dim, entries}");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != dim * dim)
    throw malformed_input("matrix_from_json: entries length != dim^2");
  Matrix<T> m(dim, dim);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t jcol = 0; jcol < dim; ++jcol)
      m(i, jcol) = scalar_from_json<T>(entries[idx++]);
  return m;
}

template <typename T>
json weights_to_json(const std::vector<T>& r) {
  json out = json::array();
  for (const T& x : r) {
    if constexpr (ScalarTraits<T>::exact)
      out.push_back(rational_to_string(x));
    else
      out.push_back(x);
  }
  return out;
}

template <typename T>
std::vector<T> weights_from_json(const json& j) {
  const json& arr = j.is_array() ? j : (j.is_object() && j.contains("r") ? j.at("r") : j);
  if (!arr.is_array())
    throw malformed_input("weights_from_json: expected an array (or {\"r\": [...]})");
  std::vector<T> out;
  for (const auto& x : arr) out.push_back(scalar_from_json<T>(x));
  return out;
}

// ---------------------------------------------------------------------
// non-degeneracy reports
// ---------------------------------------------------------------------

template <typename T>
json report_to_json(const std::string& structure_name, std::optional<int> n,
                    const std::vector<T>& r, const NondegeneracyReport<T>& rep) {
  json cells = json::array();
  for (std::size_t i = 0; i < rep.cell_metric.size(); ++i) {
    json c{{"cell", i}};
    if constexpr (ScalarTraits<T>::exact)
      c["det"] = rational_to_string(rep.cell_metric[i]);
    else
      c["min_singular_value"] = rep.cell_metric[i];
    cells.push_back(std::move(c));
  }
  json out{{"structure", structure_name},
           {"mode", ScalarTraits<T>::mode_name()},
           {"r", weights_to_json(r)},
           {"cells", cells},
           {"verdict", rep.verdict()}};
  out["n"] = n ? json(*n) : json(nullptr);
  if (rep.degenerate) {
    json witness{{"cell", *rep.witness_cell}};
    json kernel = json::array();
    for (const T& x : rep.witness_kernel) {
      if constexpr (ScalarTraits<T>::exact)
        kernel.push_back(rational_to_string(x));
      else
        kernel.push_back(x);
    }
    witness["kernel"] = kernel;
    out["witness"] = witness;
  }
  return out;
}

// ---------------------------------------------------------------------
// files
// ---------------------------------------------------------------------

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gasket

#endif  // GASKET_IO_HPP
