#pragma once

#include "qmatrix/bigint.hpp"

namespace qmatrix {

/// Stirling number of the second kind S(l, k), via the recurrence
/// S(l, k) = k*S(l-1, k) + S(l-1, k-1) with S(0,0) = 1, S(l,0) = 0 for l > 0
/// and S(l, k) = 0 for k > l. Memoized; safe for concurrent callers.
BigCount stirling2(int l, int k);

/// Binomial coefficient by the Pascal recurrence; exact.
BigCount binomial(int n, int k);

/// Poly-Bernoulli number B_p^(-m) = (-1)^p sum_{i=0}^p (-1)^i i! (i+1)^m S(p,i).
/// Counts the n-permutations (n = m+p) with every displacement i - sigma(i)
/// in [-p, m]. Requires m, p >= 1.
BigCount poly_bernoulli_neg(int p, int m);

/// Vesztergombi's count of the same restricted permutations, evaluated
/// through both of its closed forms (the 2!-binomial form and the collapsed
/// (i+1)! form). Throws std::logic_error if the two disagree.
BigCount vesztergombi_count(int m, int p);

/// Count of torus-invariant primes of the m x p quantized matrix algebra:
/// (-1)^(p-1) sum_{k=2}^{p+1} k^m sum_{j=1}^{k-1} (-1)^(j-1) C(k-1,j) j^p.
BigCount hspec_count(int m, int p);

/// (r! S(m+1, r+1))^2: the number of rank-r invariant primes in the square
/// case. Requires 0 <= r <= m.
BigCount rank_count(int m, int r);

/// u(m,t) = (m-t+1) u(m-1,t-1) + u(m-1,t) with u(m,0) = 1; coincides with
/// S(m+1, m+1-t). Requires 0 <= t <= m.
BigCount u_helper(int m, int t);

}  // namespace qmatrix
