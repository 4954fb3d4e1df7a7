#pragma once

#include <cancx/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cancx {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

// Sparse (index, value) list sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// Exact sparse matrix in canonical form: entries sorted by (col, row), no
// duplicate positions, no stored zeros.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_start_(cols + 1, 0) {}

  /// Duplicate positions are summed; zeros dropped.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries) : rows_(rows), cols_(cols) {
    for (const auto& e : entries)
      if (e.row >= rows || e.col >= cols) throw std::out_of_range("SparseMatrix: entry position out of range");
    std::sort(entries.begin(), entries.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
    for (auto& e : entries) {
      if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
        entries_.back().value += e.value;
      } else {
        entries_.push_back(std::move(e));
      }
    }
    std::erase_if(entries_, [](const MatrixEntry& e) { return e.value == 0; });
    rebuild_index();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const { return entries_; }

  /// Entries of column c as [begin, end) into entries().
  std::pair<std::size_t, std::size_t> column_range(std::size_t c) const { return {col_start_[c], col_start_[c + 1]}; }

  SparseVector column(std::size_t c) const {
    SparseVector v;
    for (auto k = col_start_[c]; k < col_start_[c + 1]; ++k) v.emplace_back(entries_[k].row, entries_[k].value);
    return v;
  }

  bool is_zero() const { return entries_.empty(); }

  SparseMatrix transpose() const {
    std::vector<MatrixEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(t));
  }

  /// [this | extra]
  SparseMatrix append_column(const SparseVector& v) const {
    std::vector<MatrixEntry> all = entries_;
    for (const auto& [r, x] : v) all.push_back({r, cols_, x});
    return SparseMatrix(rows_, cols_ + 1, std::move(all));
  }

  SparseMatrix hcat(const SparseMatrix& other) const {
    if (other.rows_ != rows_) throw std::invalid_argument("hcat: row count mismatch");
    std::vector<MatrixEntry> all = entries_;
    for (const auto& e : other.entries_) all.push_back({e.row, e.col + cols_, e.value});
    return SparseMatrix(rows_, cols_ + other.cols_, std::move(all));
  }

  SparseMatrix scaled(const Rational& s) const {
    std::vector<MatrixEntry> all = entries_;
    for (auto& e : all) e.value *= s;
    return SparseMatrix(rows_, cols_, std::move(all));
  }

  SparseVector multiply(const SparseVector& v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, x] : v) {
      if (c >= cols_) throw std::out_of_range("multiply: vector index out of range");
      for (auto k = col_start_[c]; k < col_start_[c + 1]; ++k) acc[entries_[k].row] += entries_[k].value * x;
    }
    SparseVector out;
    for (auto& [r, x] : acc)
      if (x != 0) out.emplace_back(r, std::move(x));
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("sparse product dimension mismatch");
    std::vector<MatrixEntry> out;
    for (std::size_t c = 0; c < b.cols_; ++c) {
      for (const auto& [r, x] : a.multiply(b.column(c))) out.push_back({r, c, x});
    }
    return SparseMatrix(a.rows_, b.cols_, std::move(out));
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      const auto &x = a.entries_[k], &y = b.entries_[k];
      if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
    }
    return true;
  }

 private:
  void rebuild_index() {
    col_start_.assign(cols_ + 1, 0);
    for (const auto& e : entries_) ++col_start_[e.col + 1];
    std::partial_sum(col_start_.begin(), col_start_.end(), col_start_.begin());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
  std::vector<std::size_t> col_start_ = {0};
};

// ---------------------------------------------------------------------------
// Modular rank

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline std::uint64_t residue(const Integer& z, std::uint32_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace detail

/// k-th prime below 2^31 counting downward (k = 0 gives 2^31 - 1).
inline std::uint32_t rank_prime(std::size_t k) {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t n = 2147483647u; ps.size() < 32; n -= 2)
      if (detail::is_prime_u32(n)) ps.push_back(n);
    return ps;
  }();
  return primes.at(k);
}

/// Rank of M mod prime by sparse left-looking elimination. Columns are taken
/// in order of increasing fill, pivot rows by increasing row count. Returns
/// nullopt when a denominator vanishes mod prime.
inline std::optional<std::size_t> rank_modular(const SparseMatrix& m, std::uint32_t prime) {
  if (prime < (1u << 30) || !detail::is_prime_u32(prime)) throw std::invalid_argument("rank_modular: prime must exceed 2^30");
  const std::uint64_t p = prime;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Relabel rows so sparse rows come first; they become leading rows.
  std::vector<std::uint32_t> row_count(rows, 0);
  for (const auto& e : m.entries()) ++row_count[e.row];
  std::vector<std::uint32_t> row_order(rows);
  std::iota(row_order.begin(), row_order.end(), 0u);
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return row_count[a] < row_count[b]; });
  std::vector<std::uint32_t> relabel(rows);
  for (std::uint32_t k = 0; k < rows; ++k) relabel[row_order[k]] = k;

  using Entry = std::pair<std::uint32_t, std::uint32_t>;
  std::vector<std::vector<Entry>> columns(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto [b, e] = m.column_range(c);
    for (auto k = b; k < e; ++k) {
      const auto& v = m.entries()[k].value;
      const auto den = detail::residue(v.get_den(), prime);
      if (den == 0) return std::nullopt;
      const auto num = detail::residue(v.get_num(), prime);
      if (num == 0) continue;
      columns[c].emplace_back(relabel[m.entries()[k].row], static_cast<std::uint32_t>(num * detail::inv_mod(den, p) % p));
    }
  }
  std::vector<std::size_t> col_order(cols);
  std::iota(col_order.begin(), col_order.end(), std::size_t{0});
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](std::size_t a, std::size_t b) { return columns[a].size() < columns[b].size(); });

  // pivots[k] holds the normalized reduced column whose leading row is its
  // first entry (coefficient 1, omitted); the remaining rows are larger.
  std::vector<std::int32_t> pivot_of_row(rows, -1);
  std::vector<std::vector<Entry>> pivots;
  std::vector<std::uint64_t> acc(rows, 0);
  std::vector<char> queued(rows, 0);
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;

  for (const auto c : col_order) {
    if (columns[c].empty()) continue;
    for (const auto& [r, v] : columns[c]) {
      acc[r] = v;
      queued[r] = 1;
      heap.push(r);
    }
    std::vector<Entry>().swap(columns[c]);
    while (!heap.empty()) {
      const auto r = heap.top();
      heap.pop();
      queued[r] = 0;
      if (acc[r] == 0) continue;
      const auto pv = pivot_of_row[r];
      if (pv < 0) {
        std::vector<Entry> piv;
        const auto inv = detail::inv_mod(acc[r], p);
        piv.emplace_back(r, 1u);
        acc[r] = 0;
        while (!heap.empty()) {
          const auto s = heap.top();
          heap.pop();
          queued[s] = 0;
          if (acc[s] != 0) piv.emplace_back(s, static_cast<std::uint32_t>(acc[s] * inv % p));
          acc[s] = 0;
        }
        pivot_of_row[r] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(piv));
        break;
      }
      const auto f = p - acc[r];
      acc[r] = 0;
      const auto& piv = pivots[static_cast<std::size_t>(pv)];
      for (std::size_t k = 1; k < piv.size(); ++k) {
        const auto s = piv[k].first;
        acc[s] = (acc[s] + f * piv[k].second) % p;
        if (!queued[s]) {
          queued[s] = 1;
          heap.push(s);
        }
      }
    }
  }
  return pivots.size();
}

// ---------------------------------------------------------------------------
// Exact rank

class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kExactRankLimit = 1'000'000;

/// Rank over Q by fraction-free (Bareiss) elimination on a dense copy.
/// Columns are first cleared of denominators. Throws when rows*cols exceeds
/// kExactRankLimit.
inline std::size_t rank_exact(const SparseMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (static_cast<std::uint64_t>(rows) * cols > kExactRankLimit) {
    throw SizeGuardError("rank_exact: " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds size guard");
  }
  if (rows == 0 || cols == 0 || m.nnz() == 0) return 0;
  std::vector<Integer> a(rows * cols, Integer(0));
  for (std::size_t c = 0; c < cols; ++c) {
    const auto [b, e] = m.column_range(c);
    Integer lcm = 1;
    for (auto k = b; k < e; ++k) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.entries()[k].value.get_den_mpz_t());
    for (auto k = b; k < e; ++k) {
      const auto& v = m.entries()[k].value;
      a[m.entries()[k].row * cols + c] = v.get_num() * (lcm / v.get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != rank)
      for (std::size_t c = col; c < cols; ++c) std::swap(at(sel, c), at(rank, c));
    const Integer pivot = at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer lead = at(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        Integer& x = at(r, c);
        x = pivot * x - lead * at(rank, c);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      at(r, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Certified rank protocol

struct RankOptions {
  bool exact_only = false;
  /// Blocks with rows*cols at or below this are also ranked exactly so the
  /// result is certified. 0 disables.
  std::uint64_t exact_certify_limit = 0;
};

struct RankResult {
  std::size_t value = 0;
  bool certified = false;
  std::string method;  // "trivial", "exact", "modular"
};

/// Two agreeing primes near 2^31. A modular rank never exceeds the rational
/// rank, so the value is certified when it reaches min(rows, cols) or when it
/// was confirmed exactly.
inline RankResult rank(const SparseMatrix& m, const RankOptions& opts = {}) {
  if (m.nnz() == 0) return {0, true, "trivial"};
  const auto exact_allowed = static_cast<std::uint64_t>(m.rows()) * m.cols() <= kExactRankLimit;
  if (opts.exact_only) return {rank_exact(m), true, "exact"};
  if (exact_allowed && static_cast<std::uint64_t>(m.rows()) * m.cols() <= opts.exact_certify_limit) {
    return {rank_exact(m), true, "exact"};
  }
  std::vector<std::size_t> seen;
  for (std::size_t k = 0; k < 32; ++k) {
    const auto r = rank_modular(m, rank_prime(k));
    if (!r) continue;
    if (std::find(seen.begin(), seen.end(), *r) != seen.end()) {
      // an earlier disagreement means some prime undershot; keep the largest
      const auto value = std::max(*std::max_element(seen.begin(), seen.end()), *r);
      return {value, value == std::min(m.rows(), m.cols()), "modular"};
    }
    seen.push_back(*r);
    // seen.size() == 2 here means the first two primes disagreed
    if (seen.size() >= 2 && exact_allowed) return {rank_exact(m), true, "exact"};
  }
  if (exact_allowed) return {rank_exact(m), true, "exact"};
  throw std::runtime_error("rank: no two primes agreed and the block exceeds the exact size guard");
}

/// v lies in the column span of M iff appending it does not raise the rank.
inline bool in_column_span(const SparseMatrix& m, const SparseVector& v, const RankOptions& opts = {}) {
  for (const auto& [r, x] : v)
    if (r >= m.rows()) throw std::invalid_argument("in_column_span: vector length exceeds row count");
  bool nonzero = false;
  for (const auto& [r, x] : v) nonzero = nonzero || x != 0;
  if (!nonzero) return true;
  if (m.nnz() == 0) return false;
  return rank(m.append_column(v), opts).value == rank(m, opts).value;
}

// ---------------------------------------------------------------------------
// Matrix Market style dump: "rows cols nnz" then "row col num/den", 1-based.

inline void write_matrix_market(std::ostream& os, const SparseMatrix& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (const auto& e : m.entries()) {
    os << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.get_num().get_str() << '/' << e.value.get_den().get_str()
       << '\n';
  }
}

inline SparseMatrix read_matrix_market(std::istream& is) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz)) throw std::runtime_error("matrix market: bad header");
  std::vector<MatrixEntry> entries;
  entries.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(is >> r >> c >> value) || r == 0 || c == 0) throw std::runtime_error("matrix market: bad entry line");
    entries.push_back({r - 1, c - 1, parse_rational(value)});
  }
  return SparseMatrix(rows, cols, std::move(entries));
}

}  // namespace cancx
