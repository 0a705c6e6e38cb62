#include "core/walk.hpp"

#include <algorithm>
#include <cstring>
#include <thread>

#include "core/digest.hpp"

namespace graphfp {

namespace {

// next = A * cur (loops contribute the node itself once).
void apply_adjacency(const Graph& g, const std::vector<mpz_class>& cur,
                     std::vector<mpz_class>& next) {
  const int n = g.node_count();
  for (int j = 0; j < n; ++j) {
    mpz_class& acc = next[j];
    acc = g.has_loop(j) ? cur[j] : 0;
    for (int u : g.neighbors(j)) acc += cur[u];
  }
}

}  // namespace

WalkMatrix walk_matrix(const Graph& g, int i, int col_count) {
  const int n = g.node_count();
  if (i < 0 || i >= n) throw ArgumentError("walk_matrix: node out of range");
  if (col_count < 1 || col_count > n + 1)
    throw ArgumentError("walk_matrix: column count must be in [1, n+1]");
  WalkMatrix w;
  w.source = i;
  w.cols.reserve(col_count);
  std::vector<mpz_class> cur(n, 0);
  cur[i] = 1;
  w.cols.push_back(cur);
  for (int l = 1; l < col_count; ++l) {
    std::vector<mpz_class> next(n);
    apply_adjacency(g, w.cols.back(), next);
    w.cols.push_back(std::move(next));
  }
  return w;
}

namespace {

// Incremental exact rank over Q: keeps reduced basis columns with pivots.
class RationalBasis {
 public:
  explicit RationalBasis(int n) : n_(n) {}

  // Returns true if the column was independent (and absorbs it).
  bool add(const std::vector<mpz_class>& column) {
    std::vector<mpq_class> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = column[i];
    for (size_t b = 0; b < basis_.size(); ++b) {
      const mpq_class& coeff = v[pivots_[b]];
      if (coeff == 0) continue;
      mpq_class factor = coeff;  // basis rows are normalized at the pivot
      for (int i = 0; i < n_; ++i) v[i] -= factor * basis_[b][i];
    }
    int pivot = -1;
    for (int i = 0; i < n_; ++i)
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    mpq_class inv = v[pivot];
    for (int i = 0; i < n_; ++i) v[i] /= inv;
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<mpq_class>> basis_;
  std::vector<int> pivots_;
};

}  // namespace

int walk_rank(const WalkMatrix& w) {
  RationalBasis basis(w.node_count());
  int rank = 0;
  for (const auto& col : w.cols) {
    if (!basis.add(col)) break;
    ++rank;
  }
  return rank;
}

namespace {

void serialize_value(std::string& out, const mpz_class& v) {
  size_t bytes = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (v == 0) bytes = 0;
  uint32_t len = static_cast<uint32_t>(bytes);
  for (int s = 24; s >= 0; s -= 8)
    out.push_back(static_cast<char>((len >> s) & 0xff));
  size_t pos = out.size();
  out.resize(pos + bytes);
  if (bytes > 0) {
    size_t written = 0;
    mpz_export(out.data() + pos, &written, 1, 1, 1, 0, v.get_mpz_t());
  }
}

}  // namespace

std::string serialize_row(const std::vector<mpz_class>& row) {
  std::string out;
  for (const mpz_class& v : row) serialize_value(out, v);
  return out;
}

namespace {

std::vector<std::string> sorted_serialized_rows(
    const std::vector<std::vector<mpz_class>>& cols) {
  const int n = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  std::vector<std::string> rows;
  rows.reserve(n);
  std::vector<mpz_class> row(cols.size());
  for (int j = 0; j < n; ++j) {
    for (size_t l = 0; l < cols.size(); ++l) row[l] = cols[l][j];
    rows.push_back(serialize_row(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Either the exact sorted-row serialization (small graphs) or its SHA-512
// digest (large graphs, keeps w_equivalent memory linear).
// Rows are serialized column by column against two reused walk vectors, so
// the mpz storage is allocated once per node instead of once per column.
std::string node_label_key(const Graph& g, int i, int col_count, bool exact) {
  const int n = g.node_count();
  std::vector<std::string> rows(static_cast<size_t>(n));
  std::vector<mpz_class> cur(n, 0), next(n);
  cur[i] = 1;
  for (int j = 0; j < n; ++j) serialize_value(rows[static_cast<size_t>(j)], cur[j]);
  for (int l = 1; l < col_count; ++l) {
    apply_adjacency(g, cur, next);
    std::swap(cur, next);
    for (int j = 0; j < n; ++j) serialize_value(rows[static_cast<size_t>(j)], cur[j]);
  }
  std::sort(rows.begin(), rows.end());
  if (exact) {
    std::string key;
    for (auto& r : rows) key += r;
    return key;
  }
  ShaStream sha;
  for (auto& r : rows)
    sha.update({reinterpret_cast<const uint8_t*>(r.data()), r.size()});
  auto d = sha.finish();
  return std::string(reinterpret_cast<const char*>(d.data()), d.size());
}

}  // namespace

CanonicalWalkLabel canonical_w_label(const Graph& g, int i, Truncation mode) {
  const int n = g.node_count();
  CanonicalWalkLabel label;
  label.mode = mode;
  if (mode == Truncation::n_plus_1) {
    WalkMatrix w = walk_matrix(g, i, n + 1);
    label.columns = n + 1;
    label.rows = sorted_serialized_rows(w.cols);
    return label;
  }
  // rank_based: keep the first rank+1 columns, i.e. generate until the first
  // dependent column and include it.
  RationalBasis basis(n);
  std::vector<std::vector<mpz_class>> cols;
  std::vector<mpz_class> cur(n, 0);
  cur[i] = 1;
  while (static_cast<int>(cols.size()) < n + 1) {
    bool independent = basis.add(cur);
    cols.push_back(cur);
    if (!independent) break;
    std::vector<mpz_class> next(n);
    apply_adjacency(g, cur, next);
    cur = std::move(next);
  }
  label.columns = static_cast<int>(cols.size());
  label.rows = sorted_serialized_rows(cols);
  return label;
}

bool labels_equal(const CanonicalWalkLabel& a, const CanonicalWalkLabel& b) {
  if (a.mode != b.mode)
    throw ArgumentError("cannot compare labels of different truncation modes");
  if (a.columns != b.columns) return false;  // rank mismatch => not ≐
  return a.rows == b.rows;
}

bool w_equivalent(const Graph& g1, const Graph& g2, int jobs) {
  const int n = g1.node_count();
  if (n != g2.node_count()) return false;
  if (n == 0) return true;
  const bool exact = n <= 64;
  if (jobs < 1) jobs = 1;
  // Escalating truncation: a difference at a column prefix is final, so most
  // non-equivalent pairs are rejected after a couple of columns. Two cheap
  // rejection passes, then the full run; their cost is negligible next to it.
  for (int cols : {4, 32, n + 1}) {
    const int c = std::min(cols, n + 1);
    std::vector<std::string> keys1(static_cast<size_t>(n)),
        keys2(static_cast<size_t>(n));
    auto fill = [&](int begin, int step) {
      for (int i = begin; i < n; i += step) {
        keys1[static_cast<size_t>(i)] = node_label_key(g1, i, c, exact);
        keys2[static_cast<size_t>(i)] = node_label_key(g2, i, c, exact);
      }
    };
    if (jobs == 1 || n < 2 * jobs) {
      fill(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int t = 1; t < jobs; ++t) pool.emplace_back(fill, t, jobs);
      fill(0, jobs);
      for (auto& th : pool) th.join();
    }
    std::sort(keys1.begin(), keys1.end());
    std::sort(keys2.begin(), keys2.end());
    if (keys1 != keys2) return false;
    if (c == n + 1) return true;
  }
}

TraceVector trace_vector(const Graph& g) {
  const int n = g.node_count();
  TraceVector tv;
  tv.traces.assign(n, 0);
  std::vector<mpz_class> cur(n), next(n);
  for (int i = 0; i < n; ++i) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[i] = 1;
    for (int l = 1; l <= n; ++l) {
      apply_adjacency(g, cur, next);
      std::swap(cur, next);
      tv.traces[l - 1] += cur[i];
    }
  }
  return tv;
}

bool cospectral(const Graph& g1, const Graph& g2) {
  if (g1.node_count() != g2.node_count()) return false;
  return trace_vector(g1) == trace_vector(g2);
}

}  // namespace graphfp
