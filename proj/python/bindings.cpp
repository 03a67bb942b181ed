// Python bindings for the main operations. Permutations cross the boundary
// as plain lists in one-line notation, counts as Python ints, rationals as
// "num/den" strings, and catalog entries as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "qmatrix/catalog.hpp"
#include "qmatrix/counting.hpp"
#include "qmatrix/dd_elimination.hpp"
#include "qmatrix/laurent.hpp"
#include "qmatrix/permutation.hpp"
#include "qmatrix/poset.hpp"
#include "qmatrix/qalgebra.hpp"

namespace py = pybind11;
using namespace qmatrix;

namespace {

py::int_ big_to_py(const BigCount& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

Permutation perm_from_list(const std::vector<int>& images) { return Permutation(images); }

RationalMatrix matrix_from_py(const std::vector<std::vector<std::string>>& rows) {
  const int n = static_cast<int>(rows.size());
  RationalMatrix out(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != n) {
      throw std::invalid_argument("matrix must be square");
    }
    for (int a = 1; a <= n; ++a) {
      out.at(i, a) = rational_from_string(
          rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a - 1)]);
    }
  }
  return out;
}

std::vector<std::vector<std::string>> matrix_to_py(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 1; i <= m.size(); ++i) {
    std::vector<std::string> row;
    row.reserve(static_cast<std::size_t>(m.size()));
    for (int a = 1; a <= m.size(); ++a) row.push_back(rational_to_string(m.at(i, a)));
    rows.push_back(std::move(row));
  }
  return rows;
}

py::dict minor_to_dict(const MinorIndex& g) {
  py::dict out;
  out["sign"] = (g.sign == MinorSign::Plus) ? "plus" : "minus";
  out["j"] = g.j;
  out["rows"] = g.rows;
  out["cols"] = g.cols;
  return out;
}

py::dict entry_to_dict(const CatalogEntry& entry) {
  py::dict out;
  out["sigma"] = entry.sigma.images();
  out["wMinus"] = entry.descriptor.w.minus.images();
  if (entry.rank.has_value()) out["rank"] = *entry.rank;
  py::list gens;
  for (const auto& g : entry.descriptor.generators) gens.append(minor_to_dict(g));
  out["generators"] = std::move(gens);
  return out;
}

std::vector<std::vector<int>> perms_to_lists(const std::vector<Permutation>& sigmas) {
  std::vector<std::vector<int>> out;
  out.reserve(sigmas.size());
  for (const auto& sigma : sigmas) out.push_back(sigma.images());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact combinatorics of quantized matrix algebras";

  // permutations
  m.def("longest_element", [](int n) { return longest_element(n).images(); }, py::arg("n"));
  m.def("sigma_zero", [](int mm, int pp) { return sigma_zero(mm, pp).images(); },
        py::arg("m"), py::arg("p"));
  m.def("leq_j",
        [](const std::vector<int>& a, const std::vector<int>& b, int j) {
          return leq_j(perm_from_list(a), perm_from_list(b), j);
        },
        py::arg("a"), py::arg("b"), py::arg("j"));
  m.def("bruhat_leq",
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return bruhat_leq(perm_from_list(a), perm_from_list(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("in_restricted_set",
        [](const std::vector<int>& sigma, int mm, int pp) {
          return in_restricted_set(perm_from_list(sigma), mm, pp);
        },
        py::arg("sigma"), py::arg("m"), py::arg("p"));
  m.def("length",
        [](const std::vector<int>& sigma) { return perm_from_list(sigma).inversions(); },
        py::arg("sigma"), "Number of inversions");
  m.def("compose",
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return compose(perm_from_list(a), perm_from_list(b)).images();
        },
        py::arg("a"), py::arg("b"));
  m.def("inverse",
        [](const std::vector<int>& a) { return inverse(perm_from_list(a)).images(); },
        py::arg("a"));

  // counting
  m.def("stirling2", [](int l, int k) { return big_to_py(stirling2(l, k)); },
        py::arg("l"), py::arg("k"));
  m.def("binomial", [](int n, int k) { return big_to_py(binomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("poly_bernoulli_neg",
        [](int pp, int mm) { return big_to_py(poly_bernoulli_neg(pp, mm)); },
        py::arg("p"), py::arg("m"));
  m.def("vesztergombi_count",
        [](int mm, int pp) { return big_to_py(vesztergombi_count(mm, pp)); },
        py::arg("m"), py::arg("p"));
  m.def("hspec_count", [](int mm, int pp) { return big_to_py(hspec_count(mm, pp)); },
        py::arg("m"), py::arg("p"));
  m.def("rank_count", [](int mm, int r) { return big_to_py(rank_count(mm, r)); },
        py::arg("m"), py::arg("r"));
  m.def("u_helper", [](int mm, int t) { return big_to_py(u_helper(mm, t)); },
        py::arg("m"), py::arg("t"));

  // poset
  m.def("enumerate_restricted",
        [](int mm, int pp, int bound) {
          return perms_to_lists(enumerate_restricted(mm, pp, bound));
        },
        py::arg("m"), py::arg("p"), py::arg("size_bound") = kDefaultSizeBound);
  m.def("barrier_count",
        [](const std::vector<int>& sigma, int mm) {
          return barrier_count(perm_from_list(sigma), mm);
        },
        py::arg("sigma"), py::arg("m"));
  m.def("enumerate_restricted_stratum",
        [](int mm, int t, int bound) {
          return perms_to_lists(enumerate_restricted_stratum(mm, t, bound));
        },
        py::arg("m"), py::arg("t"), py::arg("size_bound") = kDefaultSizeBound);
  m.def("hasse",
        [](int mm, int pp, int bound) {
          const PosetGraph g = hasse(mm, pp, bound);
          py::dict out;
          out["m"] = g.m;
          out["p"] = g.p;
          out["nodes"] = perms_to_lists(g.nodes);
          out["edges"] = g.edges;
          return out;
        },
        py::arg("m"), py::arg("p"), py::arg("size_bound") = kDefaultSizeBound);
  m.def("hasse_dot",
        [](int mm, int pp, int bound) { return export_dot(hasse(mm, pp, bound)); },
        py::arg("m"), py::arg("p"), py::arg("size_bound") = kDefaultSizeBound);
  m.def("hasse_json",
        [](int mm, int pp, int bound) { return export_json(hasse(mm, pp, bound)); },
        py::arg("m"), py::arg("p"), py::arg("size_bound") = kDefaultSizeBound);

  // quantized algebra
  m.def("normalize_word",
        [](int u, int v, const GenWord& word) {
          return normalize(AlgebraShape(u, v), word, LaurentQ(1)).to_string();
        },
        py::arg("rows"), py::arg("cols"), py::arg("word"),
        "Normal form of a generator word, as a string");
  m.def("quantum_minor_str",
        [](int u, int v, const std::vector<int>& rows, const std::vector<int>& cols) {
          return quantum_minor(AlgebraShape(u, v), MinorSpec(rows, cols)).to_string();
        },
        py::arg("rows_dim"), py::arg("cols_dim"), py::arg("rows"), py::arg("cols"));
  m.def("quantum_det_str", [](int n) { return quantum_det(n).to_string(); }, py::arg("n"));
  m.def("is_quantum_det_central", [](int n) { return is_central(quantum_det(n)); },
        py::arg("n"));
  m.def("verify_relations", [](int n) {
    const AlgebraShape shape(n, n);
    const QPoly qinv = QPoly::constant(shape, LaurentQ::q_power(-1));
    const QPoly bracket =
        QPoly::constant(shape, LaurentQ::q_power(1) - LaurentQ::q_power(-1));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int a = 1; a <= n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            const QPoly x = QPoly::generator(shape, i, a);
            const QPoly y = QPoly::generator(shape, i, b);
            const QPoly z = QPoly::generator(shape, j, a);
            const QPoly t = QPoly::generator(shape, j, b);
            if (!(mul(y, x) == mul(qinv, mul(x, y)) && mul(z, x) == mul(qinv, mul(x, z)) &&
                  mul(z, y) == mul(y, z) && mul(t, y) == mul(qinv, mul(y, t)) &&
                  mul(t, z) == mul(qinv, mul(z, t)) &&
                  mul(t, x) == mul(x, t) - mul(bracket, mul(y, z)))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }, py::arg("n"), "Check the defining relations on every 2x2 submatrix");

  // rational elimination
  m.def("enumerate_index_set",
        [](int mm, int pp) {
          std::vector<std::pair<int, int>> out;
          for (const auto& s : enumerate_index_set(mm, pp)) out.emplace_back(s.row, s.col);
          return out;
        },
        py::arg("m"), py::arg("p"));
  m.def("mp_leq",
        [](std::pair<int, int> a, std::pair<int, int> b, int mm) {
          return mp_leq({a.first, a.second}, {b.first, b.second}, mm);
        },
        py::arg("a"), py::arg("b"), py::arg("m"));
  m.def("random_matrix",
        [](int n, std::uint64_t seed, int lo, int hi) {
          return matrix_to_py(RationalMatrix::random_integer(n, seed, lo, hi));
        },
        py::arg("n"), py::arg("seed"), py::arg("lo") = -9, py::arg("hi") = 9);
  m.def("determinant",
        [](const std::vector<std::vector<std::string>>& rows) {
          return rational_to_string(matrix_from_py(rows).determinant());
        },
        py::arg("matrix"));
  m.def("dd_step",
        [](const std::vector<std::vector<std::string>>& rows, std::pair<int, int> pivot,
           int mm) {
          return matrix_to_py(dd_step(matrix_from_py(rows), {pivot.first, pivot.second}, mm));
        },
        py::arg("matrix"), py::arg("pivot"), py::arg("m"));
  m.def("dd_run",
        [](const std::vector<std::vector<std::string>>& rows, int mm,
           std::pair<int, int> target) {
          return matrix_to_py(dd_run(matrix_from_py(rows), mm, {target.first, target.second}));
        },
        py::arg("matrix"), py::arg("m"), py::arg("target"));
  m.def("dd_inverse_run",
        [](const std::vector<std::vector<std::string>>& rows, int mm,
           std::pair<int, int> target) {
          return matrix_to_py(
              dd_inverse_run(matrix_from_py(rows), mm, {target.first, target.second}));
        },
        py::arg("matrix"), py::arg("m"), py::arg("target"));

  // catalog
  m.def("gens_plus",
        [](const std::vector<int>& wplus) {
          py::list out;
          for (const auto& g : gens_plus(perm_from_list(wplus))) out.append(minor_to_dict(g));
          return out;
        },
        py::arg("w_plus"));
  m.def("gens_minus",
        [](const std::vector<int>& wminus) {
          py::list out;
          for (const auto& g : gens_minus(perm_from_list(wminus))) out.append(minor_to_dict(g));
          return out;
        },
        py::arg("w_minus"));
  m.def("xi_entry",
        [](const std::vector<int>& sigma, int mm, int pp) {
          return entry_to_dict(xi_descriptor(perm_from_list(sigma), mm, pp));
        },
        py::arg("sigma"), py::arg("m"), py::arg("p"));
  m.def("xi_catalog",
        [](int mm, int pp) {
          py::list out;
          for (const auto& entry : build_catalog(mm, pp)) out.append(entry_to_dict(entry));
          return out;
        },
        py::arg("m"), py::arg("p"));
  m.def("lemma_conditions_check",
        [](const std::vector<int>& wminus, int mm, int pp) {
          return lemma_conditions_check(perm_from_list(wminus), mm, pp);
        },
        py::arg("w_minus"), py::arg("m"), py::arg("p"));
  m.def("nesting_check",
        [](const std::vector<int>& a, const std::vector<int>& b, int mm, int pp) {
          return nesting_check(perm_from_list(a), perm_from_list(b), mm, pp);
        },
        py::arg("sigma"), py::arg("sigma2"), py::arg("m"), py::arg("p"));
  m.def("transfer_spotcheck", [](int mm) { return transfer_spotcheck(mm); }, py::arg("m"));

  py::register_exception<ZeroPivotError>(m, "ZeroPivotError", PyExc_ArithmeticError);
}
