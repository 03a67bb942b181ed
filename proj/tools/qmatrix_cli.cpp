// Command-line front end: exact counts, poset enumeration and export, the
// generator catalog, quantized-algebra identity checks, and the rational
// elimination runner. Exit codes: 0 success, 1 verification failure,
// 2 usage error. All output is deterministic for a fixed configuration and
// seed; big integers print as decimal strings and rationals as "num/den".

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qmatrix/catalog.hpp"
#include "qmatrix/counting.hpp"
#include "qmatrix/dd_elimination.hpp"
#include "qmatrix/permutation.hpp"
#include "qmatrix/poset.hpp"
#include "qmatrix/qalgebra.hpp"

using json = nlohmann::ordered_json;
using namespace qmatrix;

namespace {

int size_bound_from_env() {
  if (const char* raw = std::getenv("QMATRIX_SIZE_BOUND")) {
    try {
      const int value = std::stoi(raw);
      if (value >= 4 && value <= kMaxSizeBound) return value;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultSizeBound;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (int a = 1; a <= m.size(); ++a) row.push_back(rational_to_string(m.at(i, a)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json entry_to_json(const CatalogEntry& entry) {
  json doc;
  doc["sigma"] = entry.sigma.images();
  doc["wMinus"] = entry.descriptor.w.minus.images();
  if (entry.rank.has_value()) doc["rank"] = *entry.rank;
  json gens = json::array();
  for (const auto& g : entry.descriptor.generators) {
    json item;
    item["sign"] = (g.sign == MinorSign::Plus) ? "plus" : "minus";
    item["j"] = g.j;
    item["rows"] = g.rows;
    item["cols"] = g.cols;
    gens.push_back(std::move(item));
  }
  doc["generators"] = std::move(gens);
  return doc;
}

int cmd_count(int m, int p, int bound, const std::string& out_path) {
  const BigCount enumerated(enumerate_restricted(m, p, bound).size());
  const BigCount vesz = vesztergombi_count(m, p);
  const BigCount poly = poly_bernoulli_neg(p, m);
  const BigCount hspec = hspec_count(m, p);
  json doc;
  doc["m"] = m;
  doc["p"] = p;
  doc["enumeration"] = enumerated.str();
  doc["vesztergombi"] = vesz.str();
  doc["polyBernoulli"] = poly.str();
  doc["hspecFormula"] = hspec.str();
  const bool agree = (enumerated == vesz) && (vesz == poly) && (poly == hspec);
  doc["agree"] = agree;
  emit(doc.dump(2) + "\n", out_path);
  return agree ? 0 : 1;
}

int cmd_enumerate(int m, int p, std::optional<int> t, int bound, const std::string& out_path) {
  std::vector<Permutation> sigmas;
  if (t.has_value()) {
    if (m != p) throw CLI::ValidationError("--t", "strata need the square case m == p");
    sigmas = enumerate_restricted_stratum(m, *t, bound);
  } else {
    sigmas = enumerate_restricted(m, p, bound);
  }
  std::string lines;
  for (const auto& sigma : sigmas) {
    lines += json(sigma.images()).dump();
    lines += '\n';
  }
  emit(lines, out_path);
  return 0;
}

int cmd_hasse(int m, int p, const std::string& format, int bound, const std::string& out_path) {
  const PosetGraph g = hasse(m, p, bound);
  if (format == "dot") {
    emit(export_dot(g), out_path);
  } else {
    emit(export_json(g), out_path);
  }
  return 0;
}

int cmd_xi(int m, int p, const std::string& sigma_arg, int bound, const std::string& out_path) {
  json doc;
  doc["m"] = m;
  doc["p"] = p;
  json entries = json::array();
  if (!sigma_arg.empty()) {
    std::vector<int> images;
    std::stringstream stream(sigma_arg);
    std::string item;
    while (std::getline(stream, item, ',')) images.push_back(std::stoi(item));
    entries.push_back(entry_to_json(xi_descriptor(Permutation(images), m, p)));
  } else {
    if (m + p > bound) throw std::invalid_argument("m + p exceeds the configured size bound");
    for (const auto& entry : build_catalog(m, p)) entries.push_back(entry_to_json(entry));
  }
  doc["entries"] = std::move(entries);
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

int cmd_verify_relations(int n) {
  const AlgebraShape shape(n, n);
  const QPoly qinv = QPoly::constant(shape, LaurentQ::q_power(-1));
  const QPoly bracket = QPoly::constant(shape, LaurentQ::q_power(1) - LaurentQ::q_power(-1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          const QPoly x = QPoly::generator(shape, i, a);
          const QPoly y = QPoly::generator(shape, i, b);
          const QPoly z = QPoly::generator(shape, j, a);
          const QPoly t = QPoly::generator(shape, j, b);
          const char* failed = nullptr;
          if (!(mul(y, x) == mul(qinv, mul(x, y)))) failed = "yx = q^-1 xy";
          else if (!(mul(z, x) == mul(qinv, mul(x, z)))) failed = "zx = q^-1 xz";
          else if (!(mul(z, y) == mul(y, z))) failed = "zy = yz";
          else if (!(mul(t, y) == mul(qinv, mul(y, t)))) failed = "ty = q^-1 yt";
          else if (!(mul(t, z) == mul(qinv, mul(z, t)))) failed = "tz = q^-1 zt";
          else if (!(mul(t, x) == mul(x, t) - mul(bracket, mul(y, z))))
            failed = "tx = xt - (q - q^-1) yz";
          if (failed != nullptr) {
            json doc;
            doc["check"] = "relations";
            doc["n"] = n;
            doc["identity"] = failed;
            doc["rows"] = json::array({i, j});
            doc["cols"] = json::array({a, b});
            std::cout << doc.dump() << "\n";
            return 1;
          }
        }
      }
    }
  }
  json doc;
  doc["check"] = "relations";
  doc["n"] = n;
  doc["ok"] = true;
  std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_verify_delta_central(int n) {
  const QPoly delta = quantum_det(n);
  const AlgebraShape& shape = delta.shape();
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      const QPoly g = QPoly::generator(shape, row, col);
      if (!(mul(delta, g) - mul(g, delta)).is_zero()) {
        json doc;
        doc["check"] = "delta-central";
        doc["n"] = n;
        doc["identity"] = "delta commutes with Z[" + std::to_string(row) + "," +
                          std::to_string(col) + "]";
        std::cout << doc.dump() << "\n";
        return 1;
      }
    }
  }
  json doc;
  doc["check"] = "delta-central";
  doc["n"] = n;
  doc["ok"] = true;
  std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_dd_run(int n, int m, std::uint64_t seed, const std::string& target_arg,
               const std::string& trace_path, const std::string& out_path) {
  if (m < 2 || n - m < 2) throw std::invalid_argument("need 2 <= m <= n-2");
  StepIndex target{m - 1, n};
  if (!target_arg.empty()) {
    const auto comma = target_arg.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("target must be \"j,beta\"");
    target.row = std::stoi(target_arg.substr(0, comma));
    target.col = std::stoi(target_arg.substr(comma + 1));
  }
  const auto steps = enumerate_index_set(m, n - m);
  if (std::find(steps.begin(), steps.end(), target) == steps.end()) {
    throw std::invalid_argument("target is not in the index set");
  }

  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t used = seed + static_cast<std::uint64_t>(attempt);
    const RationalMatrix initial = RationalMatrix::random_integer(n, used);
    try {
      json trace = json::array();
      if (!trace_path.empty()) {
        json first;
        first["step"] = json::array({n, n + 1});
        first["matrix"] = matrix_to_json(initial);
        trace.push_back(std::move(first));
      }
      RationalMatrix state = initial;
      if (!(target == StepIndex{n, n + 1})) {
        for (auto rit = steps.rbegin() + 1; rit != steps.rend(); ++rit) {
          state = dd_step(state, *rit, m);
          if (!trace_path.empty()) {
            json item;
            item["step"] = json::array({rit->row, rit->col});
            item["matrix"] = matrix_to_json(state);
            trace.push_back(std::move(item));
          }
          if (*rit == target) break;
        }
      }
      if (!trace_path.empty()) {
        std::ofstream out(trace_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open trace file: " + trace_path);
        out << trace.dump(2) << "\n";
      }
      json doc;
      doc["n"] = n;
      doc["m"] = m;
      doc["seed"] = seed;
      doc["seedUsed"] = used;
      doc["attempts"] = attempt + 1;
      doc["target"] = json::array({target.row, target.col});
      doc["initial"] = matrix_to_json(initial);
      doc["final"] = matrix_to_json(state);
      if (mp_leq(target, StepIndex{m, m}, m)) {
        const Rational diag = state.diagonal_product();
        const Rational det = initial.determinant();
        doc["diagonalProduct"] = rational_to_string(diag);
        doc["determinant"] = rational_to_string(det);
        doc["identityHolds"] = (diag == det);
      }
      emit(doc.dump(2) + "\n", out_path);
      return 0;
    } catch (const ZeroPivotError& err) {
      // Structured report, then resample with the next seed.
      if (attempt == kMaxAttempts - 1) {
        json doc;
        doc["error"] = "zero pivot";
        doc["pivot"] = json::array({err.pivot.row, err.pivot.col});
        doc["attempts"] = kMaxAttempts;
        std::cerr << doc.dump() << "\n";
        return 1;
      }
    }
  }
  return 1;
}

int cmd_verify_catalog(int m, int p, int bound) {
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool passed, const std::string& detail) {
    json item;
    item["check"] = name;
    item["passed"] = passed;
    if (!detail.empty()) item["detail"] = detail;
    checks.push_back(std::move(item));
    all_ok = all_ok && passed;
  };

  if (m + p > bound) throw std::invalid_argument("m + p exceeds the configured size bound");
  const int n = m + p;
  record("gens_plus_w0_empty", gens_plus(longest_element(n)).empty(), "");

  const auto catalog = build_catalog(m, p);
  const bool size_ok = BigCount(catalog.size()) == poly_bernoulli_neg(p, m);
  record("catalog_size", size_ok,
         size_ok ? "" : "expected " + poly_bernoulli_neg(p, m).str());

  bool criterion_ok = true;
  std::string criterion_detail;
  bool lemma_ok = true;
  std::string lemma_detail;
  for (const auto& entry : catalog) {
    if (criterion_ok && !criterion_check(entry, m)) {
      criterion_ok = false;
      criterion_detail = "failing entry sigma=" + entry.sigma.to_string();
    }
    if (lemma_ok && !lemma_conditions_check(entry.descriptor.w.minus, m, p)) {
      lemma_ok = false;
      lemma_detail = "failing entry sigma=" + entry.sigma.to_string();
    }
  }
  record("criterion_check", criterion_ok, criterion_detail);
  record("lemma_conditions", lemma_ok, lemma_detail);

  bool nesting_ok = true;
  std::string nesting_detail;
  for (std::size_t a = 0; a < catalog.size() && nesting_ok; ++a) {
    for (std::size_t b = 0; b < catalog.size() && nesting_ok; ++b) {
      if (a == b || !bruhat_leq(catalog[a].sigma, catalog[b].sigma)) continue;
      if (!std::includes(catalog[b].descriptor.generators.begin(),
                         catalog[b].descriptor.generators.end(),
                         catalog[a].descriptor.generators.begin(),
                         catalog[a].descriptor.generators.end())) {
        nesting_ok = false;
        nesting_detail = "failing pair " + catalog[a].sigma.to_string() + " <= " +
                         catalog[b].sigma.to_string();
      }
    }
  }
  record("nesting", nesting_ok, nesting_detail);

  if (m == p) {
    bool strata_ok = true;
    std::string strata_detail;
    std::vector<long> sizes(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& entry : catalog) {
      const int t = barrier_count(entry.sigma, m);
      ++sizes[static_cast<std::size_t>(t)];
      if (entry.rank != m - t) {
        strata_ok = false;
        strata_detail = "rank label off at sigma=" + entry.sigma.to_string();
      }
    }
    for (int t = 0; t <= m && strata_ok; ++t) {
      if (BigCount(sizes[static_cast<std::size_t>(t)]) != rank_count(m, m - t)) {
        strata_ok = false;
        strata_detail = "stratum size off at t=" + std::to_string(t);
      }
    }
    record("stratification", strata_ok, strata_detail);
  }

  json doc;
  doc["m"] = m;
  doc["p"] = p;
  doc["checks"] = std::move(checks);
  doc["allPassed"] = all_ok;
  std::cout << doc.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of quantized matrix algebras: restricted "
               "permutations, invariant-prime counts, quantum-minor catalogs, "
               "and the rational elimination runner"};
  app.require_subcommand(1);
  app.fallthrough();  // parent options may follow the subcommand

  int bound = size_bound_from_env();
  app.add_option("--size-bound", bound, "Maximum permutation size n accepted by enumeration")
      ->check(CLI::Range(4, kMaxSizeBound));

  int m = 2;
  int p = 2;
  int n = 2;
  std::optional<int> stratum;
  std::string out_path;
  std::string format = "dot";
  std::string sigma_arg;
  std::string target_arg;
  std::string trace_path;
  std::uint64_t seed = 1;

  auto* count = app.add_subcommand("count", "Cross-checked restricted-permutation counts");
  count->add_option("--m", m, "Row bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  count->add_option("--p", p, "Column bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  count->add_option("--out", out_path, "Output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "List the restricted permutations");
  enumerate->add_option("--m", m, "Row bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  enumerate->add_option("--p", p, "Column bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  enumerate->add_option("--t", stratum, "Barrier stratum (square case only)");
  enumerate->add_option("--out", out_path, "Output file (default stdout)");

  auto* hasse_cmd = app.add_subcommand("hasse", "Export the Hasse diagram");
  hasse_cmd->add_option("--m", m, "Row bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  hasse_cmd->add_option("--p", p, "Column bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  hasse_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  hasse_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* xi = app.add_subcommand("xi", "Generator catalog of the invariant primes");
  xi->add_option("--m", m, "Row bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  xi->add_option("--p", p, "Column bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  xi->add_option("--sigma", sigma_arg, "Single permutation, one-line e.g. \"3,4,1,2\"");
  xi->add_option("--out", out_path, "Output file (default stdout)");

  auto* rel = app.add_subcommand("verify-relations", "Check the defining relations");
  rel->add_option("--n", n, "Grid size")->required()->check(CLI::Range(2, 6));

  auto* central = app.add_subcommand("verify-delta-central",
                                     "Check that the quantum determinant is central");
  central->add_option("--n", n, "Grid size")->required()->check(CLI::Range(1, 4));

  auto* ddrun = app.add_subcommand("dd-run", "Run the rational elimination on a seeded matrix");
  ddrun->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(4, kMaxSizeBound));
  ddrun->add_option("--m", m, "Row split")->required()->check(CLI::Range(2, kMaxSizeBound));
  ddrun->add_option("--seed", seed, "Sampling seed");
  ddrun->add_option("--target", target_arg, "Stop step \"j,beta\" (default: full run)");
  ddrun->add_option("--trace", trace_path, "Write a step-by-step JSON trace to this file");
  ddrun->add_option("--out", out_path, "Output file (default stdout)");

  auto* vcat = app.add_subcommand("verify-catalog", "Run all catalog checks");
  vcat->add_option("--m", m, "Row bound")->required()->check(CLI::Range(2, kMaxSizeBound));
  vcat->add_option("--p", p, "Column bound")->required()->check(CLI::Range(2, kMaxSizeBound));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (count->parsed()) return cmd_count(m, p, bound, out_path);
    if (enumerate->parsed()) return cmd_enumerate(m, p, stratum, bound, out_path);
    if (hasse_cmd->parsed()) return cmd_hasse(m, p, format, bound, out_path);
    if (xi->parsed()) return cmd_xi(m, p, sigma_arg, bound, out_path);
    if (rel->parsed()) return cmd_verify_relations(n);
    if (central->parsed()) return cmd_verify_delta_central(n);
    if (ddrun->parsed()) return cmd_dd_run(n, m, seed, target_arg, trace_path, out_path);
    if (vcat->parsed()) return cmd_verify_catalog(m, p, bound);
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
