#include "qmatrix/qalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmatrix {

AlgebraShape::AlgebraShape(int rows_arg, int cols_arg) : rows(rows_arg), cols(cols_arg) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("algebra shape must be positive");
}

int AlgebraShape::id_of(int row, int col) const {
  if (!valid_position(row, col)) throw std::invalid_argument("generator index out of range");
  return (row - 1) * cols + (col - 1);
}

std::pair<int, int> AlgebraShape::position_of(int id) const {
  if (id < 0 || id >= generator_count()) throw std::invalid_argument("generator id out of range");
  return {id / cols + 1, id % cols + 1};
}

QPoly QPoly::constant(AlgebraShape shape, LaurentQ value) {
  QPoly result(shape);
  if (!value.is_zero()) {
    result.terms_.emplace(Monomial(static_cast<std::size_t>(shape.generator_count()), 0),
                          std::move(value));
  }
  return result;
}

QPoly QPoly::generator(AlgebraShape shape, int row, int col) {
  QPoly result(shape);
  Monomial mono(static_cast<std::size_t>(shape.generator_count()), 0);
  mono[static_cast<std::size_t>(shape.id_of(row, col))] = 1;
  result.terms_.emplace(std::move(mono), LaurentQ(1));
  return result;
}

void QPoly::add_monomial(const Monomial& monomial, const LaurentQ& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(monomial);
  if (it == terms_.end()) {
    terms_.emplace(monomial, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_same_shape(const QPoly& a, const QPoly& b) {
  if (!(a.shape() == b.shape())) {
    throw std::invalid_argument("algebra dimension mismatch");
  }
}

// Straightening worklist. Words are flat generator-id sequences; every
// rewrite yields words that are strictly lex-smaller at the same length,
// which bounds the recursion.
struct PendingWord {
  std::vector<int> ids;
  LaurentQ coeff;
};

void normalize_into(QPoly& out, const AlgebraShape& shape, std::vector<int> ids,
                    LaurentQ coeff, RewriteStrategy strategy) {
  std::vector<PendingWord> work;
  work.push_back({std::move(ids), std::move(coeff)});
  while (!work.empty()) {
    PendingWord current = std::move(work.back());
    work.pop_back();
    if (current.coeff.is_zero()) continue;

    // Locate the adjacent out-of-order pair picked by the strategy.
    int pos = -1;
    const int len = static_cast<int>(current.ids.size());
    if (strategy == RewriteStrategy::LeftmostFirst) {
      for (int k = 0; k + 1 < len; ++k) {
        if (current.ids[static_cast<std::size_t>(k)] >
            current.ids[static_cast<std::size_t>(k) + 1]) {
          pos = k;
          break;
        }
      }
    } else {
      for (int k = len - 2; k >= 0; --k) {
        if (current.ids[static_cast<std::size_t>(k)] >
            current.ids[static_cast<std::size_t>(k) + 1]) {
          pos = k;
          break;
        }
      }
    }

    if (pos < 0) {
      Monomial mono(static_cast<std::size_t>(shape.generator_count()), 0);
      for (int id : current.ids) ++mono[static_cast<std::size_t>(id)];
      out.add_monomial(mono, current.coeff);
      continue;
    }

    const int g1 = current.ids[static_cast<std::size_t>(pos)];
    const int g2 = current.ids[static_cast<std::size_t>(pos) + 1];
    const auto [i1, a1] = shape.position_of(g1);
    const auto [i2, a2] = shape.position_of(g2);

    std::vector<int> swapped = current.ids;
    std::swap(swapped[static_cast<std::size_t>(pos)], swapped[static_cast<std::size_t>(pos) + 1]);

    if (i1 == i2 || a1 == a2) {
      // Same row or same column: q-commute.
      work.push_back({std::move(swapped), current.coeff * LaurentQ::q_power(-1)});
    } else if (a1 < a2) {
      // Antidiagonal pair (lower-left past upper-right): plain commute.
      work.push_back({std::move(swapped), current.coeff});
    } else {
      // Diagonal pair: t x = x t - (q - q^-1) y z.
      std::vector<int> corrected = current.ids;
      corrected[static_cast<std::size_t>(pos)] = shape.id_of(i2, a1);
      corrected[static_cast<std::size_t>(pos) + 1] = shape.id_of(i1, a2);
      LaurentQ factor = LaurentQ::q_power(-1) - LaurentQ::q_power(1);
      work.push_back({std::move(corrected), current.coeff * factor});
      work.push_back({std::move(swapped), current.coeff});
    }
  }
}

std::vector<int> expand_monomial(const Monomial& mono) {
  std::vector<int> ids;
  for (std::size_t g = 0; g < mono.size(); ++g) {
    for (std::uint32_t e = 0; e < mono[g]; ++e) ids.push_back(static_cast<int>(g));
  }
  return ids;
}

}  // namespace

QPoly normalize(const AlgebraShape& shape, const GenWord& word, const LaurentQ& coeff,
                RewriteStrategy strategy) {
  std::vector<int> ids;
  ids.reserve(word.size());
  for (const auto& [row, col] : word) ids.push_back(shape.id_of(row, col));
  QPoly result(shape);
  normalize_into(result, shape, std::move(ids), coeff, strategy);
  return result;
}

QPoly add(const QPoly& a, const QPoly& b) {
  require_same_shape(a, b);
  QPoly result = a;
  for (const auto& [mono, coeff] : b.terms()) result.add_monomial(mono, coeff);
  return result;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  require_same_shape(a, b);
  QPoly result(a.shape());
  for (const auto& [ma, ca] : a.terms()) {
    const std::vector<int> left = expand_monomial(ma);
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> ids = left;
      for (int id : expand_monomial(mb)) ids.push_back(id);
      normalize_into(result, a.shape(), std::move(ids), ca * cb,
                     RewriteStrategy::LeftmostFirst);
    }
  }
  return result;
}

QPoly QPoly::operator+(const QPoly& other) const { return qmatrix::add(*this, other); }

QPoly QPoly::operator-(const QPoly& other) const { return qmatrix::add(*this, -other); }

QPoly QPoly::operator*(const QPoly& other) const { return qmatrix::mul(*this, other); }

QPoly QPoly::operator-() const {
  QPoly result(shape_);
  for (const auto& [mono, coeff] : terms_) result.terms_.emplace(mono, -coeff);
  return result;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    std::string monostr;
    for (std::size_t g = 0; g < mono.size(); ++g) {
      if (mono[g] == 0) continue;
      const auto [row, col] = shape_.position_of(static_cast<int>(g));
      if (!monostr.empty()) monostr += '*';
      monostr += "Z[" + std::to_string(row) + ',' + std::to_string(col) + ']';
      if (mono[g] > 1) monostr += '^' + std::to_string(mono[g]);
    }
    std::string coeffstr = coeff.to_string();
    std::string term;
    if (monostr.empty()) {
      term = coeffstr;
    } else if (coeffstr == "1") {
      term = monostr;
    } else if (coeffstr == "-1") {
      term = '-' + monostr;
    } else if (coeffstr.find(" + ") != std::string::npos ||
               coeffstr.find(" - ") != std::string::npos) {
      term = '(' + coeffstr + ")*" + monostr;
    } else {
      term = coeffstr + '*' + monostr;
    }
    if (first) {
      out << term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out << " - " << term.substr(1);
    } else {
      out << " + " << term;
    }
  }
  return out.str();
}

MinorSpec::MinorSpec(std::vector<int> rows_arg, std::vector<int> cols_arg)
    : rows(std::move(rows_arg)), cols(std::move(cols_arg)) {
  if (rows.empty() || rows.size() != cols.size()) {
    throw std::invalid_argument("minor needs equal nonzero numbers of rows and columns");
  }
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k - 1] >= rows[k] || cols[k - 1] >= cols[k]) {
      throw std::invalid_argument("minor rows and columns must be strictly increasing");
    }
  }
  if (rows.front() < 1 || cols.front() < 1) {
    throw std::invalid_argument("minor indices are 1-based");
  }
}

QPoly quantum_minor(const AlgebraShape& shape, const MinorSpec& spec) {
  const int t = spec.order();
  if (spec.rows.back() > shape.rows || spec.cols.back() > shape.cols) {
    throw std::invalid_argument("minor indices exceed the algebra grid");
  }
  QPoly result(shape);
  std::vector<int> arrangement(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) arrangement[static_cast<std::size_t>(k)] = k;
  do {
    int inversions = 0;
    for (int u = 0; u < t; ++u) {
      for (int v = u + 1; v < t; ++v) {
        if (arrangement[static_cast<std::size_t>(u)] > arrangement[static_cast<std::size_t>(v)]) {
          ++inversions;
        }
      }
    }
    GenWord word;
    word.reserve(static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k) {
      word.emplace_back(spec.rows[static_cast<std::size_t>(k)],
                        spec.cols[static_cast<std::size_t>(arrangement[static_cast<std::size_t>(k)])]);
    }
    // (-q)^inversions
    LaurentQ sign = LaurentQ::q_power(inversions, (inversions % 2 == 0) ? 1 : -1);
    result = add(result, normalize(shape, word, sign));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return result;
}

QPoly quantum_det(int n) {
  if (n < 1) throw std::invalid_argument("quantum_det requires n >= 1");
  AlgebraShape shape(n, n);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) all[static_cast<std::size_t>(k) - 1] = k;
  return quantum_minor(shape, MinorSpec(all, all));
}

bool is_central(const QPoly& x) {
  const AlgebraShape& shape = x.shape();
  for (int row = 1; row <= shape.rows; ++row) {
    for (int col = 1; col <= shape.cols; ++col) {
      const QPoly g = QPoly::generator(shape, row, col);
      if (!(mul(x, g) - mul(g, x)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace qmatrix
