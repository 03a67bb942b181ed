#pragma once

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "qmatrix/permutation.hpp"

namespace qmatrix {

enum class MinorSign { Plus, Minus };

/// Index data of one quantum-minor generator at level j of an n x n grid.
/// Plus-minors take columns [1, j] and j rows; minus-minors take columns
/// [j+1, n] and n-j rows. Two generators with the same (sign, j, rows) name
/// the same minor, so the row set is the canonical key.
struct MinorIndex {
  MinorSign sign;
  int j;
  std::vector<int> rows;
  std::vector<int> cols;

  MinorIndex(MinorSign sign_arg, int j_arg, std::vector<int> rows_arg, int n);

  auto operator<=>(const MinorIndex&) const = default;
};

/// Deduplicated generator list describing the ideal attached to w = (w+, w-).
struct IdealDescriptor {
  PairW w;
  std::set<MinorIndex> generators;
};

/// One catalog row: sigma in the restricted poset, the descriptor of the
/// ideal attached to (w0, w0*sigma), and, in the square case, the rank
/// m - barrier_count(sigma).
struct CatalogEntry {
  Permutation sigma;
  IdealDescriptor descriptor;
  std::optional<int> rank;
};

/// Level-j plus-minors not dominated by w+: every j-subset I of [1,n] whose
/// sorted form is NOT componentwise <= sorted(w+([1,j])), paired with
/// columns [1,j]. Empty for w+ = w0.
std::set<MinorIndex> gens_plus(const Permutation& wplus);

/// Level-j minus-minors not dominated by w-: every (n-j)-subset S of [1,n]
/// whose complement's sorted form is NOT componentwise <= sorted(w-([1,j])),
/// paired with columns [j+1,n]. (The minor's rows are the images of
/// [j+1,n], while the domination condition constrains the complementary
/// images of [1,j].)
std::set<MinorIndex> gens_minus(const Permutation& wminus);

/// Catalog row for sigma: w = (w0, w0*sigma) and the union of both
/// generator families (the plus side is empty). Requires sigma to pass
/// in_restricted_set(sigma, m, p).
CatalogEntry xi_descriptor(const Permutation& sigma, int m, int p);

/// All catalog rows for the restricted set, in lex order of sigma.
std::vector<CatalogEntry> build_catalog(int m, int p);

/// Necessary condition on every generator: pairing rows i1<...<it against
/// columns a1<...<at positionally, some l must satisfy il <= m and
/// al >= m+1. Vacuously true for an empty generator set.
bool criterion_check(const CatalogEntry& entry, int m);

/// w-(n-t) <= m+1+t for all t in [0, p-2] and w-(t) >= m+1-t for all
/// t in [1, m-1].
bool lemma_conditions_check(const Permutation& wminus, int m, int p);

/// If bruhat_leq(sigma, sigma2), the generator set of sigma's entry must be
/// contained in sigma2's; returns that implication's truth value.
bool nesting_check(const Permutation& sigma, const Permutation& sigma2, int m, int p);

/// Square case (m = p, m in {2,3}): the barrier strata and the rank labels
/// agree, and every stratum size matches rank_count(m, m-t).
bool transfer_spotcheck(int m);

}  // namespace qmatrix
