#include "qmatrix/counting.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qmatrix {

BigCount to_count(const BigInt& value) {
  if (value < 0) throw std::logic_error("count came out negative");
  return value;
}

namespace {

BigInt int_pow(BigInt base, int exp) {
  BigInt result = 1;
  for (int e = 0; e < exp; ++e) result *= base;
  return result;
}

BigInt factorial(int n) {
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

// Triangular memo table for S(l, k), grown row by row under a lock.
class StirlingTable {
 public:
  BigInt get(int l, int k) {
    std::lock_guard<std::mutex> guard(mutex_);
    while (static_cast<int>(rows_.size()) <= l) {
      const int next = static_cast<int>(rows_.size());
      std::vector<BigInt> row(static_cast<std::size_t>(next) + 1);
      row[0] = (next == 0) ? 1 : 0;
      const auto& prev = rows_[static_cast<std::size_t>(next) - 1];
      for (int j = 1; j <= next; ++j) {
        const BigInt above = (j < next) ? prev[static_cast<std::size_t>(j)] : BigInt(0);
        row[static_cast<std::size_t>(j)] = BigInt(j) * above + prev[static_cast<std::size_t>(j) - 1];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mutex_;
  // rows_[l][k] = S(l, k); rows_[l-1][l] reads as 0 via the k > l guard below.
  std::vector<std::vector<BigInt>> rows_ = {{BigInt(1)}};
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

BigCount stirling2(int l, int k) {
  if (l < 0 || k < 0) throw std::invalid_argument("stirling2 requires l, k >= 0");
  if (k > l) return 0;
  return to_count(stirling_table().get(l, k));
}

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial requires n, k >= 0");
  if (k > n) return 0;
  std::vector<BigInt> row = {1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1, BigInt(0));
    next[0] = 1;
    next[static_cast<std::size_t>(i)] = 1;
    for (int j = 1; j < i; ++j) {
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] +
                                          row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return to_count(row[static_cast<std::size_t>(k)]);
}

BigCount poly_bernoulli_neg(int p, int m) {
  if (p < 1 || m < 1) throw std::invalid_argument("poly_bernoulli_neg requires m, p >= 1");
  BigInt sum = 0;
  for (int i = 0; i <= p; ++i) {
    const BigInt term = factorial(i) * int_pow(i + 1, m) * stirling2(p, i);
    sum += (i % 2 == 0) ? term : -term;
  }
  if (p % 2 != 0) sum = -sum;
  return to_count(sum);
}

BigCount vesztergombi_count(int m, int p) {
  if (m < 2 || p < 2) throw std::invalid_argument("vesztergombi_count requires m, p >= 2");
  // Form 1: 2! sum_i (-1)^(p-1+i) i! C(2+i, i) (2+i)^(m-1) S(p, i+1).
  BigInt form1 = 0;
  for (int i = 0; i <= p - 1; ++i) {
    BigInt term = 2 * factorial(i) * BigInt(binomial(2 + i, i)) * int_pow(2 + i, m - 1) *
                  stirling2(p, i + 1);
    form1 += ((p - 1 + i) % 2 == 0) ? term : -term;
  }
  // Form 2: sum_i (-1)^(p-1+i) (i+1)! (2+i)^m S(p, i+1).
  BigInt form2 = 0;
  for (int i = 0; i <= p - 1; ++i) {
    BigInt term = factorial(i + 1) * int_pow(2 + i, m) * stirling2(p, i + 1);
    form2 += ((p - 1 + i) % 2 == 0) ? term : -term;
  }
  if (form1 != form2) {
    throw std::logic_error("vesztergombi_count: the two closed forms disagree");
  }
  return to_count(form1);
}

BigCount hspec_count(int m, int p) {
  if (m < 2 || p < 2) throw std::invalid_argument("hspec_count requires m, p >= 2");
  BigInt sum = 0;
  for (int k = 2; k <= p + 1; ++k) {
    BigInt inner = 0;
    for (int j = 1; j <= k - 1; ++j) {
      const BigInt term = BigInt(binomial(k - 1, j)) * int_pow(j, p);
      inner += (j % 2 == 1) ? term : -term;
    }
    sum += int_pow(k, m) * inner;
  }
  if ((p - 1) % 2 != 0) sum = -sum;
  return to_count(sum);
}

BigCount rank_count(int m, int r) {
  if (m < 2) throw std::invalid_argument("rank_count requires m >= 2");
  if (r < 0 || r > m) throw std::invalid_argument("rank_count requires 0 <= r <= m");
  const BigInt root = factorial(r) * stirling2(m + 1, r + 1);
  return to_count(root * root);
}

namespace {

BigInt u_recurse(int m, int t, std::vector<std::vector<BigInt>>& memo,
                 std::vector<std::vector<bool>>& known) {
  if (t == 0) return 1;
  if (t > m) return 0;  // no strictly increasing t-tuple fits in [1,m]
  auto& slot = memo[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)];
  auto&& flag = known[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)];
  if (!flag) {
    slot = BigInt(m - t + 1) * u_recurse(m - 1, t - 1, memo, known) +
           u_recurse(m - 1, t, memo, known);
    flag = true;
  }
  return slot;
}

}  // namespace

BigCount u_helper(int m, int t) {
  if (m < 1) throw std::invalid_argument("u_helper requires m >= 1");
  if (t < 0 || t > m) throw std::invalid_argument("u_helper requires 0 <= t <= m");
  std::vector<std::vector<BigInt>> memo(static_cast<std::size_t>(m) + 1,
                                        std::vector<BigInt>(static_cast<std::size_t>(m) + 1));
  std::vector<std::vector<bool>> known(static_cast<std::size_t>(m) + 1,
                                       std::vector<bool>(static_cast<std::size_t>(m) + 1, false));
  return to_count(u_recurse(m, t, memo, known));
}

}  // namespace qmatrix
