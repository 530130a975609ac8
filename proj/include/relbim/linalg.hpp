#pragma once
// Sparse exact linear algebra: rational rank and kernels via fraction-free
// elimination, incremental RREF subspaces for spanning-set reduction, integer
// Smith normal form, and chain-complex homology. No floating point anywhere.

#include "relbim/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relbim {

using QVec = std::vector<Rat>;
using SparseIntRow = std::vector<std::pair<int, Int>>;  // sorted by column, no zeros

template <typename T>
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // accumulate into (r, c); entries that become zero are removed
  void add(int r, int c, const T& v) {
    check(r, c);
    if (v == 0) return;
    auto [it, fresh] = data_[r].try_emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) data_[r].erase(it);
    }
  }

  void set(int r, int c, const T& v) {
    check(r, c);
    if (v == 0)
      data_[r].erase(c);
    else
      data_[r][c] = v;
  }

  T at(int r, int c) const {
    check(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? T(0) : it->second;
  }

  const std::map<int, T>& row(int r) const { return data_.at(r); }

  long long nnz() const {
    long long n = 0;
    for (const auto& r : data_) n += static_cast<long long>(r.size());
    return n;
  }

  SparseMatrix<T> transpose() const {
    SparseMatrix<T> t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) t.set(c, r, v);
    return t;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("matrix apply: size mismatch");
    std::vector<T> y(rows_, T(0));
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
  }

  // "rows cols" header, then one "r c value" triple per line
  std::string dump() const;

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix: index out of range");
  }

  int rows_, cols_;
  std::vector<std::map<int, T>> data_;
};

using QMatrix = SparseMatrix<Rat>;
using ZMatrix = SparseMatrix<Int>;

QMatrix matmul(const QMatrix& a, const QMatrix& b);
ZMatrix matmul(const ZMatrix& a, const ZMatrix& b);

// rank over the rationals (fraction-free elimination, sparsest-column pivoting)
int rank(const QMatrix& m);
int rank(const ZMatrix& m);

// basis of the right null space; each vector is scaled to a primitive integer
// vector with positive entry at its defining free column
std::vector<QVec> kernel_basis(const QMatrix& m);

// coefficients x with sum_j x[j] * gens[j] == target, if target lies in the span
std::optional<QVec> express_in_span(const std::vector<QVec>& gens, const QVec& target);

// Incremental row-reduced span of a set of vectors. Rows are kept as
// primitive integer vectors; the pivot of a row is its LAST nonzero column,
// so reduce() computes the normal form that eliminates the largest basis
// labels first (canonical coset representatives fall out of the non-pivot
// columns).
class Subspace {
 public:
  explicit Subspace(int ambient);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  // returns true when v enlarged the span
  bool add(const QVec& v);
  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;

  // v minus its projection onto the pivot coordinates; zero iff v in span
  QVec reduce(const QVec& v) const;

  // pivot columns in increasing order
  std::vector<int> pivots() const;
  bool is_pivot(int col) const;

  // the stored RREF rows as dense rational vectors
  std::vector<QVec> basis() const;

 private:
  int ambient_;
  std::vector<SparseIntRow> rows_;  // sorted by pivot column
  std::vector<int> pivot_cols_;
  std::vector<char> pivot_mask_;
};

struct QuotientResult {
  int dim;
  std::vector<QVec> representatives;  // members of U completing span(W) to span(U)
};

// dimension and representatives of span(U)/span(W); throws std::invalid_argument
// with a witness description if span(W) is not contained in span(U)
QuotientResult subspace_quotient(const std::vector<QVec>& U, const std::vector<QVec>& W,
                                 int ambient);

struct SmithResult {
  int rank = 0;
  std::vector<Int> invariant_factors;  // positive, each divides the next
};

SmithResult smith_invariants(const ZMatrix& m);

struct HomologyResult {
  int betti = 0;
  std::vector<Int> torsion;  // invariant factors exceeding 1
};

// homology at the middle of  C2 --d_in--> C1 --d_out--> C0 ;
// throws if shapes do not compose or if d_out * d_in != 0
HomologyResult homology_at(const ZMatrix& d_out, const ZMatrix& d_in);

// helpers shared by the graded pipeline
SparseIntRow scale_to_int_row(const QVec& v);
QVec normalized_primitive(QVec v);

}  // namespace relbim
