#include "qmatrix/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmatrix/counting.hpp"
#include "qmatrix/poset.hpp"

namespace qmatrix {

MinorIndex::MinorIndex(MinorSign sign_arg, int j_arg, std::vector<int> rows_arg, int n)
    : sign(sign_arg), j(j_arg), rows(std::move(rows_arg)) {
  if (j < 1 || j > n - 1) throw std::invalid_argument("minor level j must lie in [1, n-1]");
  const int expected = (sign == MinorSign::Plus) ? j : n - j;
  if (static_cast<int>(rows.size()) != expected) {
    throw std::invalid_argument("minor row set has the wrong cardinality");
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] < 1 || rows[k] > n || (k > 0 && rows[k - 1] >= rows[k])) {
      throw std::invalid_argument("minor rows must be strictly increasing in [1, n]");
    }
  }
  const int lo = (sign == MinorSign::Plus) ? 1 : j + 1;
  const int hi = (sign == MinorSign::Plus) ? j : n;
  for (int c = lo; c <= hi; ++c) cols.push_back(c);
}

namespace {

// Visit all k-subsets of [1, n] in lexicographic order.
template <typename Visitor>
void for_each_subset(int n, int k, Visitor&& visit) {
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    visit(subset);
    int pos = k - 1;
    while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++subset[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i) - 1] + 1;
    }
  }
}

std::vector<int> sorted_prefix_images(const Permutation& w, int j) {
  std::vector<int> out(w.images().begin(), w.images().begin() + j);
  std::sort(out.begin(), out.end());
  return out;
}

bool dominated(const std::vector<int>& sorted_set, const std::vector<int>& sorted_bound) {
  for (std::size_t k = 0; k < sorted_set.size(); ++k) {
    if (sorted_set[k] > sorted_bound[k]) return false;
  }
  return true;
}

}  // namespace

std::set<MinorIndex> gens_plus(const Permutation& wplus) {
  const int n = wplus.size();
  std::set<MinorIndex> out;
  for (int j = 1; j <= n - 1; ++j) {
    const std::vector<int> bound = sorted_prefix_images(wplus, j);
    for_each_subset(n, j, [&](const std::vector<int>& rows) {
      if (!dominated(rows, bound)) {
        out.emplace(MinorSign::Plus, j, rows, n);
      }
    });
  }
  return out;
}

std::set<MinorIndex> gens_minus(const Permutation& wminus) {
  const int n = wminus.size();
  std::set<MinorIndex> out;
  for (int j = 1; j <= n - 1; ++j) {
    const std::vector<int> bound = sorted_prefix_images(wminus, j);
    // The domination condition lives on the complement of the row set.
    for_each_subset(n, j, [&](const std::vector<int>& complement) {
      if (dominated(complement, bound)) return;
      std::vector<int> rows;
      rows.reserve(static_cast<std::size_t>(n - j));
      std::size_t c = 0;
      for (int v = 1; v <= n; ++v) {
        if (c < complement.size() && complement[c] == v) {
          ++c;
        } else {
          rows.push_back(v);
        }
      }
      out.emplace(MinorSign::Minus, j, std::move(rows), n);
    });
  }
  return out;
}

CatalogEntry xi_descriptor(const Permutation& sigma, int m, int p) {
  if (!in_restricted_set(sigma, m, p)) {
    throw std::invalid_argument("sigma is outside the restricted set");
  }
  const int n = m + p;
  const Permutation w0 = longest_element(n);
  const Permutation wminus = compose(w0, sigma);
  IdealDescriptor descriptor{PairW(w0, wminus), {}};
  descriptor.generators = gens_plus(w0);  // empty at w0
  for (const auto& g : gens_minus(wminus)) descriptor.generators.insert(g);
  std::optional<int> rank;
  if (m == p) rank = m - barrier_count(sigma, m);
  return CatalogEntry{sigma, std::move(descriptor), rank};
}

std::vector<CatalogEntry> build_catalog(int m, int p) {
  std::vector<CatalogEntry> out;
  for (const auto& sigma : enumerate_restricted(m, p)) {
    out.push_back(xi_descriptor(sigma, m, p));
  }
  return out;
}

bool criterion_check(const CatalogEntry& entry, int m) {
  for (const auto& g : entry.descriptor.generators) {
    bool found = false;
    for (std::size_t l = 0; l < g.rows.size(); ++l) {
      if (g.rows[l] <= m && g.cols[l] >= m + 1) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool lemma_conditions_check(const Permutation& wminus, int m, int p) {
  const int n = wminus.size();
  if (n != m + p) throw std::invalid_argument("permutation size must equal m + p");
  for (int t = 0; t <= p - 2; ++t) {
    if (wminus(n - t) > m + 1 + t) return false;
  }
  for (int t = 1; t <= m - 1; ++t) {
    if (wminus(t) < m + 1 - t) return false;
  }
  return true;
}

bool nesting_check(const Permutation& sigma, const Permutation& sigma2, int m, int p) {
  if (!bruhat_leq(sigma, sigma2)) return true;
  const auto a = xi_descriptor(sigma, m, p);
  const auto b = xi_descriptor(sigma2, m, p);
  return std::includes(b.descriptor.generators.begin(), b.descriptor.generators.end(),
                       a.descriptor.generators.begin(), a.descriptor.generators.end());
}

bool transfer_spotcheck(int m) {
  if (m != 2 && m != 3) throw std::invalid_argument("spot check covers m in {2, 3}");
  const auto catalog = build_catalog(m, m);
  std::vector<int> stratum_sizes(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& entry : catalog) {
    const int t = barrier_count(entry.sigma, m);
    if (!entry.rank.has_value() || *entry.rank != m - t) return false;
    ++stratum_sizes[static_cast<std::size_t>(t)];
  }
  for (int t = 0; t <= m; ++t) {
    if (BigCount(stratum_sizes[static_cast<std::size_t>(t)]) != rank_count(m, m - t)) {
      return false;
    }
  }
  return true;
}

}  // namespace qmatrix
