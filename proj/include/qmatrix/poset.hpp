#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmatrix/permutation.hpp"

namespace qmatrix {

inline constexpr int kDefaultSizeBound = 10;
inline constexpr int kMaxSizeBound = 12;

/// Hasse diagram of the restricted sub-poset of the reverse Bruhat order.
/// Nodes are in lexicographic order; edges are (child, parent) covering
/// relations (the transitive reduction of the comparability relation).
struct PosetGraph {
  int m = 0;
  int p = 0;
  std::vector<Permutation> nodes;
  std::vector<std::pair<int, int>> edges;
};

/// All n-permutations (n = m+p) with displacements in [-p, m], in
/// lexicographic order. Filters all n! permutations for n <= 8 and switches
/// to backtracking with displacement pruning (position i only admits images
/// in [i-m, i+p]) for larger n. Requires m, p >= 2 and n <= size_bound.
std::vector<Permutation> enumerate_restricted(int m, int p,
                                              int size_bound = kDefaultSizeBound);

/// Number of positions j in [m+1, 2m] with sigma(j) <= m: how many integers
/// sigma moves from the right to the left of the barrier between positions
/// m and m+1. Square case only (sigma must have even size 2m).
int barrier_count(const Permutation& sigma, int m);

/// Elements of enumerate_restricted(m, m) whose barrier_count equals t.
std::vector<Permutation> enumerate_restricted_stratum(int m, int t,
                                                      int size_bound = kDefaultSizeBound);

/// Covering relations of the reverse Bruhat order restricted to the set:
/// pairwise comparison followed by transitive reduction.
PosetGraph hasse(int m, int p, int size_bound = kDefaultSizeBound);

/// DOT digraph with nodes labeled in one-line notation; in the square case
/// nodes are filled with one color class per barrier-count stratum. Output
/// is deterministic: nodes in lex order, edges sorted.
std::string export_dot(const PosetGraph& g);

/// JSON object {"m", "p", "nodes", "edges"} with nodes as one-line arrays
/// and edges as [child, parent] index pairs. Deterministic ordering.
std::string export_json(const PosetGraph& g);

}  // namespace qmatrix
