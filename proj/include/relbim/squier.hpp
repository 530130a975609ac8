#pragma once
// Derivation graph and Squier complex of a monoid presentation, truncated by
// word length: vertices are words, edges are one-step rewrites (u,(l,r),v),
// 2-cells record disjoint applications of two rewrites. Component-wise H1
// over the integers, plus the identification of cell boundaries with bracket
// elements of the converted algebra presentation.

#include "relbim/graded.hpp"
#include "relbim/linalg.hpp"
#include "relbim/presentation.hpp"
#include "relbim/words.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace relbim {

struct SquierEdge {
  Word left;   // u
  int rel;     // relation index
  Word right;  // v
  int src;     // vertex index of u l v
  int dst;     // vertex index of u r v
};

struct SquierCell {
  Word u;
  int rel1;
  Word v;
  int rel2;
  Word w;
};

class SquierSlice {
 public:
  // vertices: all words of length <= max_len; edges and cells only when every
  // word on their boundary fits within the bound
  static SquierSlice build(MonoidPresentation pres, int max_len);

  const MonoidPresentation& presentation() const { return pres_; }
  int max_len() const { return max_len_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  const std::vector<SquierEdge>& edges() const { return edges_; }
  const std::vector<SquierCell>& cells() const { return cells_; }

  int vertex_index(const Word& w) const;  // throws if absent
  int component_of(int vertex) const { return component_.at(vertex); }
  int component_count() const { return component_count_; }

  // (d2, d1): d1 is |V| x |E| with column dst - src, d2 is |E| x |C| with the
  // four-term cell boundary; d1 * d2 = 0 is verified
  std::pair<ZMatrix, ZMatrix> boundary_matrices() const;

  // H1 of the basepoint's path component
  HomologyResult component_h1(const Word& basepoint) const;

  // deterministic adjacency listing plus cell list
  std::string dump() const;

 private:
  SquierSlice() = default;

  MonoidPresentation pres_{nullptr, {}};
  int max_len_ = 0;
  std::vector<Word> vertices_;
  std::map<Word, int> vertex_of_;
  std::vector<SquierEdge> edges_;
  std::map<TensorCell, int> edge_of_;
  std::vector<SquierCell> cells_;
  std::vector<int> component_;
  int component_count_ = 0;

  HomologyResult restricted_h1(const std::vector<char>& keep_vertex) const;
  friend HomologyResult slice_h1_total(const MonoidPresentation&, int);
};

// exact integral H1 of the full length-n part of the Squier complex; the
// presentation must be length-homogeneous, otherwise the slice would be
// truncated and the result uncertified
HomologyResult slice_h1_total(const MonoidPresentation& pres, int n);

struct EdgeEmbeddingReport {
  int cells_checked = 0;
  bool passed = false;
};

// checks, cell by cell, that the image of the cellular boundary under
// (u,(l,r),v) -> u (x) (r-l) (x) v  equals  -u [r_i - l_i, v, r_j - l_j] w
EdgeEmbeddingReport edge_embedding_check(const MonoidPresentation& pres, int max_len);

}  // namespace relbim
