#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "core/graph.hpp"

namespace graphfp {

// Walk-count matrix for a source node: column l holds the number of walks of
// length l from the source to every node (A^l e_i, exact integers).
struct WalkMatrix {
  int source = 0;
  std::vector<std::vector<mpz_class>> cols;
  int node_count() const {
    return cols.empty() ? 0 : static_cast<int>(cols[0].size());
  }
};

WalkMatrix walk_matrix(const Graph& g, int i, int col_count);

// Exact rank over the rationals; equals the first column index that is a
// linear combination of the previous ones.
int walk_rank(const WalkMatrix& w);

enum class Truncation { n_plus_1, rank_based };

// Canonical representative of a walk matrix up to row permutation: the rows,
// serialized, in sorted order. Labels of different truncation modes are not
// comparable; rank_based labels of different rank compare unequal.
struct CanonicalWalkLabel {
  Truncation mode = Truncation::n_plus_1;
  int columns = 0;
  std::vector<std::string> rows;
};

CanonicalWalkLabel canonical_w_label(const Graph& g, int i, Truncation mode);

// Throws ArgumentError on mixed truncation modes.
bool labels_equal(const CanonicalWalkLabel& a, const CanonicalWalkLabel& b);

bool w_equivalent(const Graph& g1, const Graph& g2, int jobs = 1);

// trace(A^l) for l = 1..n.
struct TraceVector {
  std::vector<mpz_class> traces;
  bool operator==(const TraceVector&) const = default;
};

TraceVector trace_vector(const Graph& g);

// Exact cospectrality: equal node counts and equal closed-walk traces for
// l = 1..n (power sums determine the characteristic polynomial).
bool cospectral(const Graph& g1, const Graph& g2);

// Length-prefixed big-endian serialization of one row of walk counts; byte
// order sorts identically to the numeric row order.
std::string serialize_row(const std::vector<mpz_class>& row);

}  // namespace graphfp
