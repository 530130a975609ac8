#pragma once
// Test-only brute-force oracle: dense rational elimination, dense integer
// Smith reduction and dense per-degree dimension counts, built without any of
// the sparse machinery under test. Deliberately naive.

#include "relbim/freealg.hpp"
#include "relbim/linalg.hpp"
#include "relbim/presentation.hpp"
#include "relbim/words.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {

using relbim::Int;
using relbim::Rat;
using DMat = std::vector<std::vector<Rat>>;

inline int dense_rank(DMat a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (int j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// dense textbook Smith reduction: always the leftmost-topmost nonzero pivot,
// Euclidean row/column reduction, no size-minimizing heuristics
inline std::vector<Int> dense_smith(std::vector<std::vector<Int>> a) {
  std::vector<Int> factors;
  if (a.empty() || a[0].empty()) return factors;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int t = 0;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows && pi < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    while (true) {
      bool again = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          again = true;
        }
      }
      if (again) continue;
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          again = true;
        }
      }
      if (again) continue;
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (int c = t; c < cols; ++c) a[t][c] += a[i][c];
            fixed = true;
          }
      if (!fixed) break;
    }
    if (a[t][t] < 0) a[t][t] = -a[t][t];
    factors.push_back(a[t][t]);
    ++t;
  }
  return factors;
}

inline DMat to_dense(const relbim::ZMatrix& m) {
  DMat a(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = Rat(v);
  return a;
}

struct DenseHomology {
  int betti = 0;
  std::vector<Int> torsion;
};

inline DenseHomology dense_homology(const relbim::ZMatrix& d_out, const relbim::ZMatrix& d_in) {
  DenseHomology h;
  int rank_out = dense_rank(to_dense(d_out));
  int rank_in = dense_rank(to_dense(d_in));
  h.betti = (d_out.cols() - rank_out) - rank_in;
  std::vector<std::vector<Int>> din(d_in.rows(), std::vector<Int>(d_in.cols(), Int(0)));
  for (int r = 0; r < d_in.rows(); ++r)
    for (const auto& [c, v] : d_in.row(r)) din[r][c] = v;
  for (const Int& f : dense_smith(din))
    if (f > 1) h.torsion.push_back(f);
  return h;
}

// ---------------------------------------------------------------------------
// dense per-degree dimensions for a graded presentation

class GradedOracle {
 public:
  explicit GradedOracle(relbim::AlgebraPresentation pres) : pres_(std::move(pres)) {
    for (const auto& r : pres_.relations)
      degs_.push_back(relbim::homogeneous_degree(r).degree);
  }

  int dim_words(int d) { return static_cast<int>(words(d).size()); }

  int dim_ideal_power(int m, int d) { return dense_rank(ideal_rows(m, d)); }

  int dim_algebra(int d) { return dim_words(d) - dim_ideal_power(1, d); }

  int dim_fr(int d) {
    int n = 0;
    for (size_t i = 0; i < pres_.relations.size(); ++i)
      for (int a = 0; a + degs_[i] <= d; ++a)
        n += dim_words(a) * dim_words(d - degs_[i] - a);
    return n;
  }

  int dim_h(int d) { return dim_fr(d) - dense_rank(alpha_rows(d)); }

  int dim_d(int d) { return dense_rank(d_rows(d)); }

  int dim_pi2(int d) {
    // D must lie inside ker(alpha); verify densely before subtracting
    DMat al = alpha_rows(d);
    for (const auto& drow : d_rows(d)) {
      std::vector<Rat> image(dim_words(d), Rat(0));
      for (size_t k = 0; k < drow.size(); ++k) {
        if (drow[k] == 0) continue;
        for (int c = 0; c < dim_words(d); ++c) image[c] += drow[k] * al[k][c];
      }
      for (const Rat& x : image)
        if (x != 0) throw std::logic_error("oracle: D escapes ker(alpha)");
    }
    return dim_h(d) - dim_d(d);
  }

 private:
  const std::vector<relbim::Word>& words(int d) {
    auto it = words_.find(d);
    if (it == words_.end())
      it = words_.emplace(d, relbim::enumerate_words(pres_.alphabet, d)).first;
    return it->second;
  }

  // index of a tensor monomial (u, i, v) in the oracle's own FR ordering
  int fr_index(int d, const relbim::Word& u, int i, const relbim::Word& v) {
    int base = 0;
    for (int k = 0; k < i; ++k)
      for (int a = 0; a + degs_[k] <= d; ++a)
        base += dim_words(a) * dim_words(d - degs_[k] - a);
    for (int a = 0; a < u.length(); ++a) base += dim_words(a) * dim_words(d - degs_[i] - a);
    return base + static_cast<int>(relbim::lex_rank(u)) * dim_words(d - degs_[i] - u.length()) +
           static_cast<int>(relbim::lex_rank(v));
  }

  DMat ideal_rows(int m, int d) {
    using relbim::NcPoly;
    using relbim::Word;
    DMat rows;
    const int nrel = static_cast<int>(pres_.relations.size());
    auto emit = [&](const NcPoly& p) {
      std::vector<Rat> row(dim_words(d), Rat(0));
      for (const auto& [w, c] : p.terms()) row[relbim::lex_rank(w)] = c;
      rows.push_back(std::move(row));
    };
    if (m == 1) {
      for (int i = 0; i < nrel; ++i)
        for (int a = 0; a + degs_[i] <= d; ++a)
          for (const Word& u : words(a))
            for (const Word& v : words(d - degs_[i] - a))
              emit(NcPoly::monomial(u) * pres_.relations[i] * NcPoly::monomial(v));
    } else if (m == 2) {
      for (int i = 0; i < nrel; ++i)
        for (int j = 0; j < nrel; ++j) {
          int rest = d - degs_[i] - degs_[j];
          for (int a = 0; a <= rest; ++a)
            for (int b = 0; a + b <= rest; ++b)
              for (const Word& u : words(a))
                for (const Word& v : words(b))
                  for (const Word& w : words(rest - a - b))
                    emit(NcPoly::monomial(u) * pres_.relations[i] * NcPoly::monomial(v) *
                         pres_.relations[j] * NcPoly::monomial(w));
        }
    } else {
      for (int i = 0; i < nrel; ++i)
        for (int j = 0; j < nrel; ++j)
          for (int k = 0; k < nrel; ++k) {
            int rest = d - degs_[i] - degs_[j] - degs_[k];
            for (int a = 0; a <= rest; ++a)
              for (int b = 0; a + b <= rest; ++b)
                for (int c = 0; a + b + c <= rest; ++c)
                  for (const Word& u : words(a))
                    for (const Word& v : words(b))
                      for (const Word& w : words(c))
                        for (const Word& t : words(rest - a - b - c))
                          emit(NcPoly::monomial(u) * pres_.relations[i] * NcPoly::monomial(v) *
                               pres_.relations[j] * NcPoly::monomial(w) * pres_.relations[k] *
                               NcPoly::monomial(t));
          }
    }
    return rows;
  }

  // rows of alpha as a map FR_d -> KX*_d: row per tensor monomial, in the
  // same (i, |u|, u, v) order that fr_index assumes
  DMat alpha_rows(int d) {
    using relbim::Word;
    DMat rows;
    for (size_t i = 0; i < pres_.relations.size(); ++i)
      for (int a = 0; a + degs_[i] <= d; ++a)
        for (const Word& u : words(a))
          for (const Word& v : words(d - degs_[i] - a)) {
            std::vector<Rat> row(dim_words(d), Rat(0));
            for (const auto& [w, c] : pres_.relations[i].terms())
              row[relbim::lex_rank(concat(u, concat(w, v)))] += c;
            rows.push_back(std::move(row));
          }
    return rows;
  }

  // spanning rows of D_d inside the oracle's FR coordinates
  DMat d_rows(int d) {
    using relbim::Word;
    DMat rows;
    const int nrel = static_cast<int>(pres_.relations.size());
    for (int i = 0; i < nrel; ++i)
      for (int j = 0; j < nrel; ++j) {
        int base = degs_[i] + degs_[j];
        if (base > d) continue;
        for (int ulen = 0; ulen + base <= d; ++ulen)
          for (const Word& u : words(ulen)) {
            int rest = d - base - ulen;
            for (int vlen = 0; vlen <= rest; ++vlen)
              for (const Word& v : words(vlen))
                for (const Word& w : words(rest - vlen)) {
                  // v [r_i, u, r_j] w = v (x) r_i (x) u r_j w - v r_i u (x) r_j (x) w
                  std::vector<Rat> row(dim_fr(d), Rat(0));
                  for (const auto& [m2, c2] : pres_.relations[j].terms())
                    row[fr_index(d, v, i, concat(u, concat(m2, w)))] += c2;
                  for (const auto& [m1, c1] : pres_.relations[i].terms())
                    row[fr_index(d, concat(v, concat(m1, u)), j, w)] -= c1;
                  rows.push_back(std::move(row));
                }
          }
      }
    return rows;
  }

  relbim::AlgebraPresentation pres_;
  std::vector<int> degs_;
  std::map<int, std::vector<relbim::Word>> words_;
};

}  // namespace oracle
