#include "relbim/linalg.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace relbim {

namespace {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;


// fraction-free update r := (pivot * r - r[pc] * prow) / prev; the division is
// exact (Sylvester identity) provided EVERY active row is updated each step,
// including rows with r[pc] = 0, which are rescaled by pivot/prev
SparseIntRow bareiss_combine(const SparseIntRow& r, const SparseIntRow& prow, int pc,
                             const Int& pivot, const Int& rc, const Int& prev) {
  SparseIntRow out;
  out.reserve(r.size() + prow.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < prow.size()) {
    int ci = i < r.size() ? r[i].first : INT_MAX;
    int cj = j < prow.size() ? prow[j].first : INT_MAX;
    int c = std::min(ci, cj);
    Int v = 0;
    if (ci == c) v += pivot * r[i++].second;
    if (cj == c) v -= rc * prow[j++].second;
    if (c == pc) continue;  // eliminated exactly
    if (v == 0) continue;
    Int q = v / prev;
    if (q * prev != v) throw std::logic_error("bareiss: inexact division");
    out.emplace_back(c, std::move(q));
  }
  return out;
}

struct BareissResult {
  int ncols = 0;
  std::vector<SparseIntRow> pivot_rows;  // frozen, in pivot order
  std::vector<int> pivot_cols;
  std::vector<Int> pivot_vals;
};

// forward fraction-free elimination; pivot column = sparsest active column,
// pivot row = fewest nonzeros among candidates. Deterministic.
BareissResult bareiss(std::vector<SparseIntRow> rows, int ncols, int max_pivot_col = -1) {
  if (max_pivot_col < 0) max_pivot_col = ncols;
  BareissResult res;
  res.ncols = ncols;
  Int prev = 1;
  std::erase_if(rows, [](const SparseIntRow& r) { return r.empty(); });
  while (!rows.empty()) {
    std::vector<int> count(ncols, 0);
    for (const auto& r : rows)
      for (const auto& [c, v] : r) ++count[c];
    int pc = -1;
    for (int c = 0; c < max_pivot_col; ++c)
      if (count[c] > 0 && (pc < 0 || count[c] < count[pc])) pc = c;
    if (pc < 0) break;  // remaining support is outside the pivotable columns
    size_t pr = rows.size();
    for (size_t k = 0; k < rows.size(); ++k) {
      bool has = std::any_of(rows[k].begin(), rows[k].end(),
                             [&](const auto& e) { return e.first == pc; });
      if (has && (pr == rows.size() || rows[k].size() < rows[pr].size())) pr = k;
    }
    SparseIntRow prow = std::move(rows[pr]);
    rows.erase(rows.begin() + pr);
    Int pivot = 0;
    for (const auto& [c, v] : prow)
      if (c == pc) pivot = v;
    std::vector<SparseIntRow> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      Int rc = 0;
      for (const auto& [c, v] : r)
        if (c == pc) rc = v;
      SparseIntRow r2 = bareiss_combine(r, prow, pc, pivot, rc, prev);
      if (!r2.empty()) next.push_back(std::move(r2));
    }
    rows = std::move(next);
    res.pivot_rows.push_back(std::move(prow));
    res.pivot_cols.push_back(pc);
    res.pivot_vals.push_back(pivot);
    prev = pivot;
  }
  return res;
}

template <typename T>
std::vector<SparseIntRow> matrix_rows_scaled(const SparseMatrix<T>& m);

template <>
std::vector<SparseIntRow> matrix_rows_scaled(const SparseMatrix<Rat>& m) {
  std::vector<SparseIntRow> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    const auto& data = m.row(r);
    if (data.empty()) continue;
    Int l = 1;
    for (const auto& [c, v] : data) l = lcm(l, denominator(v));
    SparseIntRow row;
    row.reserve(data.size());
    for (const auto& [c, v] : data)
      row.emplace_back(c, numerator(v) * (l / denominator(v)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <>
std::vector<SparseIntRow> matrix_rows_scaled(const SparseMatrix<Int>& m) {
  std::vector<SparseIntRow> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    const auto& data = m.row(r);
    if (data.empty()) continue;
    rows.emplace_back(data.begin(), data.end());
  }
  return rows;
}

// back-substitution through the frozen triangular system: one kernel vector
// per free column, deterministic order
std::vector<QVec> kernel_from(const BareissResult& e) {
  std::vector<char> is_pivot(e.ncols, 0);
  for (int c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<QVec> kernel;
  for (int f = 0; f < e.ncols; ++f) {
    if (is_pivot[f]) continue;
    QVec x(e.ncols, Rat(0));
    x[f] = 1;
    for (int k = static_cast<int>(e.pivot_rows.size()) - 1; k >= 0; --k) {
      Rat s = 0;
      for (const auto& [c, v] : e.pivot_rows[k])
        if (c != e.pivot_cols[k]) s += Rat(v) * x[c];
      x[e.pivot_cols[k]] = -s / Rat(e.pivot_vals[k]);
    }
    kernel.push_back(normalized_primitive(std::move(x)));
  }
  return kernel;
}

}  // namespace

template <typename T>
std::string SparseMatrix<T>::dump() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << '\n';
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out << r << ' ' << c << ' ' << v << '\n';
  return out.str();
}

template std::string SparseMatrix<Rat>::dump() const;
template std::string SparseMatrix<Int>::dump() const;

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (const auto& [k, av] : a.row(r))
      for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
  return out;
}

ZMatrix matmul(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  ZMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (const auto& [k, av] : a.row(r))
      for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
  return out;
}

int rank(const QMatrix& m) {
  return static_cast<int>(bareiss(matrix_rows_scaled(m), m.cols()).pivot_cols.size());
}

int rank(const ZMatrix& m) {
  return static_cast<int>(bareiss(matrix_rows_scaled(m), m.cols()).pivot_cols.size());
}

std::vector<QVec> kernel_basis(const QMatrix& m) {
  return kernel_from(bareiss(matrix_rows_scaled(m), m.cols()));
}

SparseIntRow scale_to_int_row(const QVec& v) {
  Int l = 1;
  for (const auto& x : v)
    if (x != 0) l = lcm(l, denominator(x));
  SparseIntRow row;
  for (size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) row.emplace_back(static_cast<int>(c), numerator(v[c]) * (l / denominator(v[c])));
  return row;
}

QVec normalized_primitive(QVec v) {
  Int l = 1;
  for (const auto& x : v)
    if (x != 0) l = lcm(l, denominator(x));
  Int g = 0;
  for (const auto& x : v)
    if (x != 0) g = gcd(g, numerator(x) * (l / denominator(x)));
  if (g == 0) return v;
  for (auto& x : v)
    if (x != 0) x = Rat(numerator(x) * (l / denominator(x)) / g);
  return v;
}

std::optional<QVec> express_in_span(const std::vector<QVec>& gens, const QVec& target) {
  const int n = static_cast<int>(target.size());
  const int k = static_cast<int>(gens.size());
  // equations indexed by ambient coordinates, unknowns by generators;
  // the target sits in an extra column that is never pivoted
  std::vector<QVec> eq(n, QVec(k + 1, Rat(0)));
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(gens[j].size()) != n)
      throw std::invalid_argument("express_in_span: ambient mismatch");
    for (int r = 0; r < n; ++r) eq[r][j] = gens[j][r];
  }
  for (int r = 0; r < n; ++r) eq[r][k] = target[r];
  std::vector<SparseIntRow> rows;
  for (int r = 0; r < n; ++r) {
    SparseIntRow row = scale_to_int_row(eq[r]);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  BareissResult e = bareiss(std::move(rows), k + 1, k);
  // rows whose support lies only in the target column witness inconsistency;
  // bareiss leaves them unpivoted, so re-check the residual system
  // by back-substitution and verification.
  QVec x(k + 1, Rat(0));
  x[k] = -1;
  for (int j = static_cast<int>(e.pivot_rows.size()) - 1; j >= 0; --j) {
    Rat s = 0;
    for (const auto& [c, v] : e.pivot_rows[j])
      if (c != e.pivot_cols[j]) s += Rat(v) * x[c];
    x[e.pivot_cols[j]] = -s / Rat(e.pivot_vals[j]);
  }
  QVec coeffs(x.begin(), x.begin() + k);
  // verify (also catches inconsistent systems)
  QVec check(n, Rat(0));
  for (int j = 0; j < k; ++j)
    if (coeffs[j] != 0)
      for (int r = 0; r < n; ++r) check[r] += coeffs[j] * gens[j][r];
  for (int r = 0; r < n; ++r)
    if (check[r] != target[r]) return std::nullopt;
  return coeffs;
}

Subspace::Subspace(int ambient) : ambient_(ambient), pivot_mask_(ambient, 0) {
  if (ambient < 0) throw std::invalid_argument("subspace: negative ambient dimension");
}

QVec Subspace::reduce(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("subspace reduce: ambient mismatch");
  QVec w = v;
  // rows are echelon with pivot = last entry; clearing pivots in descending
  // order only ever introduces entries at smaller columns, so one pass leaves
  // w zero on every pivot column
  for (size_t k = rows_.size(); k-- > 0;) {
    const Rat& cv = w[pivot_cols_[k]];
    if (cv == 0) continue;
    Rat f = cv / Rat(rows_[k].back().second);
    for (const auto& [c, val] : rows_[k]) w[c] -= f * Rat(val);
  }
  return w;
}

bool Subspace::contains(const QVec& v) const {
  QVec w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows_) {
    QVec v(ambient_, Rat(0));
    for (const auto& [c, val] : row) v[c] = Rat(val);
    if (!contains(v)) return false;
  }
  return true;
}

bool Subspace::add(const QVec& v) {
  QVec w = reduce(v);
  int p = -1;
  for (int c = ambient_ - 1; c >= 0; --c)
    if (w[c] != 0) {
      p = c;
      break;
    }
  if (p < 0) return false;
  SparseIntRow nr = scale_to_int_row(w);
  if (nr.back().second < 0)
    for (auto& [c, val] : nr) val = -val;
  // eliminate the new pivot column from existing rows, keeping integers primitive
  for (auto& row : rows_) {
    Int rc = 0;
    for (const auto& [c, val] : row)
      if (c == p) rc = val;
    if (rc == 0) continue;
    const Int& np = nr.back().second;
    SparseIntRow merged;
    size_t i = 0, j = 0;
    while (i < row.size() || j < nr.size()) {
      int ci = i < row.size() ? row[i].first : INT_MAX;
      int cj = j < nr.size() ? nr[j].first : INT_MAX;
      int c = std::min(ci, cj);
      Int val = 0;
      if (ci == c) val += np * row[i++].second;
      if (cj == c) val -= rc * nr[j++].second;
      if (val != 0) merged.emplace_back(c, val);
    }
    Int g = 0;
    for (const auto& [c, val] : merged) g = gcd(g, val);
    if (g > 1)
      for (auto& [c, val] : merged) val /= g;
    if (merged.back().second < 0)
      for (auto& [c, val] : merged) val = -val;
    row = std::move(merged);
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), p);
  size_t idx = pos - pivot_cols_.begin();
  pivot_cols_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(nr));
  pivot_mask_[p] = 1;
  return true;
}

std::vector<int> Subspace::pivots() const { return pivot_cols_; }

bool Subspace::is_pivot(int col) const { return pivot_mask_.at(col) != 0; }

std::vector<QVec> Subspace::basis() const {
  std::vector<QVec> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    QVec v(ambient_, Rat(0));
    for (const auto& [c, val] : row) v[c] = Rat(val);
    out.push_back(std::move(v));
  }
  return out;
}

QuotientResult subspace_quotient(const std::vector<QVec>& U, const std::vector<QVec>& W,
                                 int ambient) {
  Subspace u(ambient);
  for (const auto& v : U) u.add(v);
  for (size_t k = 0; k < W.size(); ++k)
    if (!u.contains(W[k])) {
      std::ostringstream msg;
      msg << "subspace_quotient: W[" << k << "] lies outside span(U)";
      throw std::invalid_argument(msg.str());
    }
  Subspace s(ambient);
  for (const auto& v : W) s.add(v);
  int wdim = s.dim();
  QuotientResult res;
  for (const auto& v : U)
    if (s.add(v)) res.representatives.push_back(v);
  res.dim = u.dim() - wdim;
  return res;
}

namespace {

struct DenseGrid {
  int rows, cols;
  std::vector<std::vector<Int>> a;
};

void grid_swap_rows(DenseGrid& g, int i, int j) { std::swap(g.a[i], g.a[j]); }

void grid_swap_cols(DenseGrid& g, int i, int j) {
  for (int r = 0; r < g.rows; ++r) std::swap(g.a[r][i], g.a[r][j]);
}

}  // namespace

SmithResult smith_invariants(const ZMatrix& m) {
  DenseGrid g{m.rows(), m.cols(), {}};
  g.a.assign(g.rows, std::vector<Int>(g.cols, Int(0)));
  for (int r = 0; r < g.rows; ++r)
    for (const auto& [c, v] : m.row(r)) g.a[r][c] = v;

  SmithResult res;
  const int limit = std::min(g.rows, g.cols);
  for (int t = 0; t < limit; ++t) {
    // size-minimizing pivot in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < g.rows; ++i)
      for (int j = t; j < g.cols; ++j) {
        if (g.a[i][j] == 0) continue;
        if (pi < 0 || abs(g.a[i][j]) < abs(g.a[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    grid_swap_rows(g, t, pi);
    grid_swap_cols(g, t, pj);

    while (true) {
      // clear column t
      bool restart = false;
      for (int i = t + 1; i < g.rows && !restart; ++i) {
        if (g.a[i][t] == 0) continue;
        Int q = g.a[i][t] / g.a[t][t];
        if (q != 0)
          for (int j = t; j < g.cols; ++j) g.a[i][j] -= q * g.a[t][j];
        if (g.a[i][t] != 0) {  // remainder became the smaller pivot
          grid_swap_rows(g, t, i);
          restart = true;
        }
      }
      if (restart) continue;
      // clear row t
      for (int j = t + 1; j < g.cols && !restart; ++j) {
        if (g.a[t][j] == 0) continue;
        Int q = g.a[t][j] / g.a[t][t];
        if (q != 0)
          for (int i = t; i < g.rows; ++i) g.a[i][j] -= q * g.a[i][t];
        if (g.a[t][j] != 0) {
          grid_swap_cols(g, t, j);
          restart = true;
        }
      }
      if (restart) continue;
      // enforce divisibility of the trailing block by the pivot
      bool fixed = false;
      for (int i = t + 1; i < g.rows && !fixed; ++i)
        for (int j = t + 1; j < g.cols && !fixed; ++j)
          if (g.a[i][j] % g.a[t][t] != 0) {
            for (int c = t; c < g.cols; ++c) g.a[t][c] += g.a[i][c];
            fixed = true;
          }
      if (!fixed) break;
    }
    if (g.a[t][t] < 0) g.a[t][t] = -g.a[t][t];
    res.invariant_factors.push_back(g.a[t][t]);
    ++res.rank;
  }
  return res;
}

HomologyResult homology_at(const ZMatrix& d_out, const ZMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("homology_at: shapes do not compose");
  ZMatrix composite = matmul(d_out, d_in);
  for (int r = 0; r < composite.rows(); ++r)
    if (!composite.row(r).empty()) {
      int col = composite.row(r).begin()->first;
      std::ostringstream msg;
      msg << "homology_at: d_out * d_in != 0 (witness column " << col << ")";
      throw std::invalid_argument(msg.str());
    }
  HomologyResult res;
  SmithResult s = smith_invariants(d_in);
  res.betti = (d_out.cols() - rank(d_out)) - s.rank;
  for (const auto& f : s.invariant_factors)
    if (f > 1) res.torsion.push_back(f);
  return res;
}

}  // namespace relbim
