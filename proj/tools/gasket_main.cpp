// gasket: build Sierpinski level-1 networks, solve and verify harmonic
// structures, certify non-degeneracy, and render extensions.
//
// Exit codes: 0 all verifications passed, 1 a mathematical verification
// failed, 2 malformed input or configuration.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gasket/cell_structure.hpp"
#include "gasket/errors.hpp"
#include "gasket/harmonic.hpp"
#include "gasket/io.hpp"
#include "gasket/laplacian.hpp"
#include "gasket/scalar.hpp"
#include "gasket/svg.hpp"
#include "gasket/verifiers.hpp"

namespace {

using namespace gasket;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string mode = "exact";
  Tolerances tol;
  unsigned seed = 0;

  // sweep
  int n_min = 2;
  int n_max = 12;

  // shared inputs
  std::string structure;
  std::string d_file;
  std::string r_file;
  std::string boundary;
  std::string address;
  std::string out;
  std::string svg;

  int samples = 20;
  int orbit_samples = 0;
};

CellStructure resolve_structure(const std::string& spec) {
  if (spec == "star-toy") return build_star_toy();
  if (spec.rfind("sg", 0) == 0 && spec.size() > 2) {
    bool digits = true;
    for (std::size_t i = 2; i < spec.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(spec[i]));
    if (digits) return build_sg(std::stoi(spec.substr(2)));
  }
  return structure_from_json(read_json_file(spec));
}

template <typename T>
Matrix<T> load_d(const Options& opt, const CellStructure& s) {
  if (opt.d_file.empty())
    return standard_boundary_laplacian<T>(s.boundary_size);
  return matrix_from_json<T>(read_json_file(opt.d_file));
}

template <typename T>
std::vector<T> parse_scalar_list(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream in(normalized);
  std::vector<T> out;
  std::string token;
  while (in >> token) out.push_back(ScalarTraits<T>::parse(token));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream in(normalized);
  std::vector<int> out;
  int x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) throw malformed_input("cannot parse integer list: " + text);
  return out;
}

template <typename T>
void check_weights(const std::vector<T>& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!(r[i] > T(0)))
      throw invalid_parameter("weights must satisfy r_i > 0 (r[" +
                              std::to_string(i) + "] = " +
                              ScalarTraits<T>::str(r[i]) + ")");
}

/// r from file, or the solved homogeneous structure when absent.
template <typename T>
std::vector<T> load_r(const Options& opt, const CellStructure& s,
                      const Matrix<T>& d) {
  if (!opt.r_file.empty()) {
    auto r = weights_from_json<T>(read_json_file(opt.r_file));
    if (r.size() != s.cells.size())
      throw malformed_input("weights file: need one weight per cell (" +
                            std::to_string(s.cells.size()) + ")");
    check_weights(r);
    return r;
  }
  const auto solve = solve_homogeneous_ratio(s, d, opt.tol);
  if (!solve.proportional)
    throw invalid_parameter(
        "no homogeneous harmonic structure exists for this D; pass --r");
  return std::vector<T>(s.cells.size(), solve.ratio);
}

std::optional<int> sg_level(const CellStructure& s) {
  if (s.name.rfind("sg", 0) != 0) return std::nullopt;
  for (std::size_t i = 2; i < s.name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s.name[i]))) return std::nullopt;
  return std::stoi(s.name.substr(2));
}

void emit(std::ostream* file, const std::string& line) {
  std::cout << line << "\n";
  if (file) *file << line << "\n";
}

// -----------------------------------------------------------------------
// sweep
// -----------------------------------------------------------------------

template <typename T>
int run_sweep(const Options& opt) {
  const int cap = ScalarTraits<T>::exact ? 16 : 64;
  if (opt.n_min < 2 || opt.n_max < opt.n_min || opt.n_max > 64)
    throw invalid_parameter("sweep range must satisfy 2 <= n-min <= n-max <= 64");
  if (opt.n_max > cap)
    throw invalid_parameter(std::string("sweep in ") + ScalarTraits<T>::mode_name() +
                            " mode caps at n = " + std::to_string(cap));

  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw malformed_input("cannot open output file: " + opt.out);
  }
  std::ostream* fp = opt.out.empty() ? nullptr : &file;

  emit(fp, "n,mode,r_star,min_metric,verdict,millis");

  bool all_good = true;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const CellStructure s = build_sg(n);
    const Matrix<T> d = standard_boundary_laplacian<T>(s.boundary_size);

    std::string r_star = "-", metric = "-", verdict;
    const auto solve = solve_homogeneous_ratio(s, d, opt.tol);
    if (!solve.proportional) {
      verdict = "no-homogeneous-structure";
      all_good = false;
    } else {
      r_star = ScalarTraits<T>::str(solve.ratio);
      HarmonicCandidate<T> cand{d, std::vector<T>(s.cells.size(), solve.ratio)};
      const auto harmonic = is_harmonic_structure(s, cand, opt.tol);
      if (!harmonic.holds) {
        verdict = "not-harmonic";
        all_good = false;
      } else {
        const auto rep = nondegeneracy_report(extension_matrices(s, cand), opt.tol);
        metric = ScalarTraits<T>::str(rep.min_metric());
        verdict = rep.verdict();
        if (rep.degenerate) all_good = false;
      }
    }
    const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::ostringstream row;
    row << n << "," << ScalarTraits<T>::mode_name() << "," << r_star << ","
        << metric << "," << verdict << "," << millis;
    emit(fp, row.str());
  }
  return all_good ? kOk : kVerificationFailed;
}

// -----------------------------------------------------------------------
// verify
// -----------------------------------------------------------------------

struct CheckLog {
  int failures = 0;

  void record(bool ok, const std::string& name, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

template <typename T>
int run_verify(const Options& opt) {
  if constexpr (!ScalarTraits<T>::exact)
    std::cerr << "warning: float mode compares level sets within tolerance "
              << opt.tol.level_set << "; exact mode is authoritative\n";

  const CellStructure s = resolve_structure(opt.structure);
  const Matrix<T> d = load_d<T>(opt, s);
  const std::vector<T> r = load_r<T>(opt, s, d);

  CheckLog log;

  const auto d_verdict = validate_laplacian(d, opt.tol);
  log.record(d_verdict.ok(), "laplacian-valid-D",
             d_verdict.ok() ? "" : d_verdict.violations.front());
  if (!d_verdict.ok()) return kVerificationFailed;

  HarmonicCandidate<T> cand{d, r};
  const auto harmonic = is_harmonic_structure(s, cand, opt.tol);
  log.record(harmonic.holds, "harmonic-structure",
             "max residual " + ScalarTraits<T>::str(harmonic.residual));

  const Matrix<T> h1 = assemble_h1(s, d, r);
  const auto h1_verdict = validate_laplacian(h1, opt.tol);
  log.record(h1_verdict.ok(), "laplacian-valid-H1",
             h1_verdict.ok() ? "" : h1_verdict.violations.front());

  const auto mats = extension_matrices(s, cand);
  const auto rep = nondegeneracy_report(mats, opt.tol);
  {
    std::ostringstream detail;
    detail << "min metric " << ScalarTraits<T>::str(rep.min_metric());
    if (rep.degenerate) {
      detail << "; witness cell " << *rep.witness_cell << ", kernel (";
      for (std::size_t i = 0; i < rep.witness_kernel.size(); ++i)
        detail << (i ? ", " : "") << ScalarTraits<T>::str(rep.witness_kernel[i]);
      detail << ")";
    }
    log.record(!rep.degenerate, "nondegenerate", detail.str());
  }

  const AdjacencyGraph g = adjacency(s);
  const auto interior = s.interior_vertices();
  const bool two_conn = interior.size() >= 3 && is_two_connected(g, interior);
  log.record(two_conn, "interior-2-connected");

  // subset boundaries: #boundary(A) >= 2 on random proper interior subsets
  std::mt19937 rng(opt.seed);
  if (interior.size() >= 3) {
    bool ok = true;
    std::uniform_int_distribution<std::size_t> size_dist(2, interior.size() - 1);
    for (int trial = 0; trial < 200 && ok; ++trial) {
      std::vector<int> pool = interior;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(size_dist(rng));
      ok = subset_boundary(s, std::set<int>(pool.begin(), pool.end())).size() >= 2;
    }
    log.record(ok, "subset-boundary-size");
  }

  // sampled boundary data drive the pointwise verifiers
  std::uniform_int_distribution<int> value_dist(-9, 9);
  auto sample_boundary = [&]() {
    while (true) {
      std::vector<T> u;
      for (int i = 0; i < s.boundary_size; ++i) u.push_back(T(value_dist(rng)));
      for (int i = 1; i < s.boundary_size; ++i)
        if (!(u[i] == u[0])) return u;
    }
  };
  const std::set<int> v0(s.boundary_vertices.begin(), s.boundary_vertices.end());

  bool max_principle_ok = true, chains_ok = true, constancy_ok = true,
       consistency_ok = true;
  for (int trial = 0; trial < opt.samples; ++trial) {
    const auto u0 = sample_boundary();
    const auto v = harmonic_extend(h1, s, u0);

    try {
      max_principle_ok =
          max_principle_ok && verify_maximum_principle(h1, v0, v, opt.tol).pass;
    } catch (const GasketError&) {
      max_principle_ok = false;
    }

    for (int p : interior) {
      bool eligible = false;
      for (int q : g.neighbors[p])
        if (!ScalarTraits<T>::eq(v[q], v[p], opt.tol.level_set)) eligible = true;
      if (!eligible) continue;
      for (auto dir : {ChainDirection::Increasing, ChainDirection::Decreasing}) {
        try {
          const Chain c = monotone_chain(h1, s, v, p, dir, opt.tol);
          chains_ok = chains_ok && s.is_boundary(c.vertices.back());
        } catch (const GasketError&) {
          chains_ok = false;
        }
      }
    }

    constancy_ok = constancy_ok && check_cell_constancy(s, v, opt.tol).empty();

    for (std::size_t i = 0; i < s.cells.size() && consistency_ok; ++i) {
      const auto via = mats[i].apply(u0);
      for (int pos = 0; pos < s.boundary_size; ++pos)
        consistency_ok = consistency_ok &&
                         ScalarTraits<T>::eq(v[s.cells[i][pos]], via[pos],
                                             opt.tol.entry);
    }
  }
  log.record(max_principle_ok, "maximum-principle",
             std::to_string(opt.samples) + " samples");
  log.record(chains_ok, "monotone-chains",
             std::to_string(opt.samples) + " samples, both directions");
  log.record(constancy_ok, "cell-constancy-empty",
             std::to_string(opt.samples) + " samples");
  log.record(consistency_ok, "extension-consistency",
             std::to_string(opt.samples) + " samples");

  // optional extra certification over random orbit-weighted structures
  if (opt.orbit_samples > 0) {
    bool orbit_ok = true;
    const auto orbits = cell_orbits(s);
    std::uniform_int_distribution<int> weight_dist(1, 9);
    for (int trial = 0; trial < opt.orbit_samples && orbit_ok; ++trial) {
      std::vector<T> weights;
      for (std::size_t o = 0; o < orbits.size(); ++o)
        weights.push_back(T(weight_dist(rng)));
      const auto solve = solve_orbit_scale(s, orbits, d, weights, opt.tol);
      orbit_ok = solve.proportional;
      if (orbit_ok) {
        HarmonicCandidate<T> oc{d, solve.r};
        orbit_ok = is_harmonic_structure(s, oc, opt.tol).holds &&
                   !nondegeneracy_report(extension_matrices(s, oc), opt.tol)
                        .degenerate;
      }
    }
    log.record(orbit_ok, "orbit-weighted-structures",
               std::to_string(opt.orbit_samples) + " samples");
  }

  if (!opt.out.empty()) {
    const json doc = report_to_json(s.name, sg_level(s), r, rep);
    write_text_file(opt.out, doc.dump(2) + "\n");
  }

  std::cout << (log.failures == 0 ? "all checks passed"
                                  : std::to_string(log.failures) + " check(s) failed")
            << "\n";
  return log.failures == 0 ? kOk : kVerificationFailed;
}

// -----------------------------------------------------------------------
// extend
// -----------------------------------------------------------------------

template <typename T>
int run_extend(const Options& opt) {
  const CellStructure s = resolve_structure(opt.structure);
  const Matrix<T> d = load_d<T>(opt, s);
  const std::vector<T> r = load_r<T>(opt, s, d);

  const auto u0 = parse_scalar_list<T>(opt.boundary);
  if (u0.size() != static_cast<std::size_t>(s.boundary_size))
    throw malformed_input("boundary values: expected " +
                          std::to_string(s.boundary_size) + " scalars");

  const Matrix<T> h1 = assemble_h1(s, d, r);
  const auto v = harmonic_extend(h1, s, u0);

  json doc{{"structure", s.name}, {"mode", ScalarTraits<T>::mode_name()}};
  json values = json::array();
  for (const T& x : v) {
    if constexpr (ScalarTraits<T>::exact)
      values.push_back(rational_to_string(x));
    else
      values.push_back(x);
  }
  doc["values"] = values;

  std::cout << "extension on " << s.name << ":\n";
  for (int p = 0; p < s.vertex_count; ++p)
    std::cout << "  v[" << p << "] = " << ScalarTraits<T>::str(v[p])
              << (s.is_boundary(p) ? "  (boundary)" : "") << "\n";

  if (!opt.address.empty()) {
    const auto address = parse_int_list(opt.address);
    const auto cand_mats = extension_matrices(s, HarmonicCandidate<T>{d, r});
    const auto cell_values = evaluate_at_address(cand_mats, address, u0);
    json addr = json::array();
    std::cout << "values at address (" << opt.address << "):\n";
    for (std::size_t i = 0; i < cell_values.size(); ++i) {
      std::cout << "  corner " << i << " = " << ScalarTraits<T>::str(cell_values[i])
                << "\n";
      if constexpr (ScalarTraits<T>::exact)
        addr.push_back(rational_to_string(cell_values[i]));
      else
        addr.push_back(cell_values[i]);
    }
    doc["address"] = address;
    doc["address_values"] = addr;
  }

  if (!opt.svg.empty()) {
    std::vector<double> heat;
    for (const T& x : v) heat.push_back(to_double(x));
    write_text_file(opt.svg, render_svg(s, heat));
    std::cout << "wrote " << opt.svg << "\n";
  }
  if (!opt.out.empty()) write_text_file(opt.out, doc.dump(2) + "\n");
  return kOk;
}

// -----------------------------------------------------------------------
// orbits / render
// -----------------------------------------------------------------------

int run_orbits(const Options& opt) {
  const CellStructure s = resolve_structure(opt.structure);
  const auto orbits = cell_orbits(s);
  std::cout << s.name << ": " << orbits.size() << " orbit(s)\n";
  json doc{{"structure", s.name}, {"orbits", json::array()}};
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    std::cout << "  orbit " << o << " (size " << orbits[o].size() << "):";
    for (int cell : orbits[o]) std::cout << " " << cell;
    std::cout << "\n";
    doc["orbits"].push_back(orbits[o]);
  }
  if (!opt.out.empty()) write_text_file(opt.out, doc.dump(2) + "\n");
  return kOk;
}

template <typename T>
int run_render(const Options& opt) {
  const CellStructure s = resolve_structure(opt.structure);
  std::vector<double> heat;
  if (!opt.boundary.empty()) {
    const Matrix<T> d = load_d<T>(opt, s);
    const std::vector<T> r = load_r<T>(opt, s, d);
    const auto u0 = parse_scalar_list<T>(opt.boundary);
    if (u0.size() != static_cast<std::size_t>(s.boundary_size))
      throw malformed_input("boundary values: expected " +
                            std::to_string(s.boundary_size) + " scalars");
    const auto v = harmonic_extend(assemble_h1(s, d, r), s, u0);
    for (const T& x : v) heat.push_back(to_double(x));
  }
  write_text_file(opt.svg, render_svg(s, heat));
  std::cout << "wrote " << opt.svg << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sierpinski level-1 networks: harmonic structures, extension matrices, "
      "and non-degeneracy certification"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--mode", opt.mode, "scalar mode: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tol-entry", opt.tol.entry, "entrywise equality tolerance (float mode)");
    cmd->add_option("--tol-residual", opt.tol.residual, "harmonic residual tolerance (float mode)");
    cmd->add_option("--sv-floor", opt.tol.sv_floor, "singular value degeneracy floor (float mode)");
    cmd->add_option("--seed", opt.seed, "random seed for sampled checks");
    cmd->add_option("--out", opt.out, "output file");
  };

  CLI::App* sweep = app.add_subcommand(
      "sweep", "homogeneous-structure nondegeneracy sweep over a range of n");
  add_common(sweep);
  sweep->add_option("--n-min", opt.n_min, "smallest n (>= 2)");
  sweep->add_option("--n-max", opt.n_max, "largest n (<= 16 exact, <= 64 float)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full verification battery on one structure");
  add_common(verify);
  verify->add_option("--structure", opt.structure,
                     "sgN, star-toy, or a structure JSON file")->required();
  verify->add_option("--d", opt.d_file, "boundary Laplacian JSON (default: standard)");
  verify->add_option("--r", opt.r_file, "weights JSON (default: solved homogeneous)");
  verify->add_option("--samples", opt.samples, "random boundary samples");
  verify->add_option("--orbit-samples", opt.orbit_samples,
                     "additional random orbit-weighted structures to certify");

  CLI::App* extend = app.add_subcommand(
      "extend", "harmonic extension of boundary values (optionally at a cell address)");
  add_common(extend);
  extend->add_option("--structure", opt.structure, "sgN, star-toy, or JSON file")
      ->required();
  extend->add_option("--d", opt.d_file, "boundary Laplacian JSON");
  extend->add_option("--r", opt.r_file, "weights JSON");
  extend->add_option("--boundary", opt.boundary, "k boundary values, e.g. \"1,0,0\"")
      ->required();
  extend->add_option("--address", opt.address, "cell address, e.g. \"0 0\"");
  extend->add_option("--svg", opt.svg, "write an SVG heatmap of the level-1 graph");

  CLI::App* orbits = app.add_subcommand("orbits", "cell orbit partition under the triangle symmetries");
  add_common(orbits);
  orbits->add_option("--structure", opt.structure, "sgN or JSON file")->required();

  CLI::App* render = app.add_subcommand("render", "render the level-1 graph as SVG");
  add_common(render);
  render->add_option("--structure", opt.structure, "sgN or JSON file")->required();
  render->add_option("--d", opt.d_file, "boundary Laplacian JSON");
  render->add_option("--r", opt.r_file, "weights JSON");
  render->add_option("--boundary", opt.boundary, "color vertices by this extension");
  render->add_option("--svg", opt.svg, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  const bool exact = opt.mode == "exact";
  try {
    if (*sweep) return exact ? run_sweep<Rational>(opt) : run_sweep<double>(opt);
    if (*verify) return exact ? run_verify<Rational>(opt) : run_verify<double>(opt);
    if (*extend) return exact ? run_extend<Rational>(opt) : run_extend<double>(opt);
    if (*orbits) return run_orbits(opt);
    if (*render) return exact ? run_render<Rational>(opt) : run_render<double>(opt);
  } catch (const GasketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
