#include "qmatrix/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qmatrix {

namespace {

void check_bounds(int m, int p, int size_bound) {
  if (m < 2 || p < 2) throw std::invalid_argument("enumeration requires m, p >= 2");
  if (size_bound > kMaxSizeBound) size_bound = kMaxSizeBound;
  if (m + p > size_bound) {
    throw std::invalid_argument("m + p exceeds the configured size bound");
  }
}

void backtrack(int n, int m, int p, std::vector<int>& prefix, std::vector<bool>& used,
               std::vector<Permutation>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.emplace_back(prefix);
    return;
  }
  // Displacement restriction: only images in [i-m, i+p] can extend the prefix.
  const int lo = std::max(1, i - m);
  const int hi = std::min(n, i + p);
  for (int v = lo; v <= hi; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = true;
    prefix.push_back(v);
    backtrack(n, m, p, prefix, used, out);
    prefix.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

std::vector<Permutation> enumerate_restricted(int m, int p, int size_bound) {
  check_bounds(m, p, size_bound);
  const int n = m + p;
  std::vector<Permutation> out;
  if (n <= 8) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      Permutation sigma(v);
      if (in_restricted_set(sigma, m, p)) out.push_back(std::move(sigma));
    } while (std::next_permutation(v.begin(), v.end()));
  } else {
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    backtrack(n, m, p, prefix, used, out);
  }
  // Both paths already emit in lex order.
  std::sort(out.begin(), out.end());
  return out;
}

int barrier_count(const Permutation& sigma, int m) {
  if (sigma.size() % 2 != 0 || sigma.size() != 2 * m) {
    throw std::invalid_argument("barrier_count needs a permutation of size 2m");
  }
  int t = 0;
  for (int j = m + 1; j <= 2 * m; ++j) {
    if (sigma(j) <= m) ++t;
  }
  return t;
}

std::vector<Permutation> enumerate_restricted_stratum(int m, int t, int size_bound) {
  if (t < 0 || t > m) throw std::invalid_argument("stratum index t must lie in [0, m]");
  std::vector<Permutation> out;
  for (auto& sigma : enumerate_restricted(m, m, size_bound)) {
    if (barrier_count(sigma, m) == t) out.push_back(std::move(sigma));
  }
  return out;
}

PosetGraph hasse(int m, int p, int size_bound) {
  PosetGraph g;
  g.m = m;
  g.p = p;
  g.nodes = enumerate_restricted(m, p, size_bound);
  const int count = static_cast<int>(g.nodes.size());

  // Full strict comparability, then drop every edge implied by a 2-step path.
  std::vector<std::vector<bool>> less(static_cast<std::size_t>(count),
                                      std::vector<bool>(static_cast<std::size_t>(count), false));
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a != b && bruhat_leq(g.nodes[static_cast<std::size_t>(a)],
                               g.nodes[static_cast<std::size_t>(b)])) {
        less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
      }
    }
  }
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (!less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      bool covered = true;
      for (int c = 0; c < count; ++c) {
        if (less[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
            less[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) {
          covered = false;
          break;
        }
      }
      if (covered) g.edges.emplace_back(a, b);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string export_dot(const PosetGraph& g) {
  // One fill color per stratum in the square case.
  static const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                   "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
  const bool square = (g.m == g.p) && g.m >= 2;
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, style=filled, fillcolor=white];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& sigma = g.nodes[i];
    out << "  n" << i << " [label=\"";
    for (int k = 1; k <= sigma.size(); ++k) {
      if (k > 1) out << ',';
      out << sigma(k);
    }
    out << '"';
    if (square) {
      const int t = barrier_count(sigma, g.m);
      out << ", fillcolor=\"" << kPalette[t % 8] << '"';
    }
    out << "];\n";
  }
  for (const auto& [child, parent] : g.edges) {
    out << "  n" << child << " -> n" << parent << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const PosetGraph& g) {
  nlohmann::ordered_json doc;
  doc["m"] = g.m;
  doc["p"] = g.p;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& sigma : g.nodes) doc["nodes"].push_back(sigma.images());
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [child, parent] : g.edges) {
    doc["edges"].push_back(nlohmann::ordered_json::array({child, parent}));
  }
  return doc.dump(2) + "\n";
}

}  // namespace qmatrix
