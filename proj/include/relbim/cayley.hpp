#pragma once
// Finite monoid enumeration by bounded congruence closure, the one-sided and
// two-sided Cayley complexes of a monoid presentation, and their exact
// integral homology.

#include "relbim/linalg.hpp"
#include "relbim/presentation.hpp"
#include "relbim/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relbim {

struct FiniteMonoid {
  int size = 0;
  std::vector<Word> elements;           // canonical representative words, index 0 = identity
  std::vector<std::vector<int>> table;  // table[a][b] = a * b
  std::vector<int> generator_image;     // generator index -> element index

  int mul(int a, int b) const { return table.at(a).at(b); }
  int eval(const Word& w) const;
};

// bounded congruence closure; empty when the closure does not certifiably
// stabilize at this bound (that is a value, not an error)
std::optional<FiniteMonoid> enumerate_finite_monoid(const MonoidPresentation& pres,
                                                    int max_len);

// "size n" header then n rows of n element indices; element 0 is the identity
// and elements 1..|X| are the generator images in generator order
std::string export_table(const FiniteMonoid& m);
FiniteMonoid import_table(const std::string& text, const MonoidPresentation& pres);

enum class CayleySide { left, two_sided };

struct CayleyComplex {
  CayleySide side = CayleySide::left;
  int monoid_size = 0;
  int ngens = 0;
  int nrels = 0;
  int nv = 0, ne = 0, nf = 0;
  ZMatrix d1{0, 0};  // nv x ne
  ZMatrix d2{0, 0};  // ne x nf
  std::vector<int> edge_src;     // source vertex of each edge
  std::vector<int> cell_anchor;  // a boundary vertex of each 2-cell
  std::vector<int> vertex_component;
  int component_count = 0;
  // two-sided only: the product m*m' of each vertex (m, m')
  std::vector<int> vertex_product;

  int vertex_index(int m, int mp) const;
  int edge_index(int m, int x, int mp) const;
  int cell_index(int m, int rel, int mp) const;
};

CayleyComplex build_cayley(const FiniteMonoid& m, const MonoidPresentation& pres,
                           CayleySide side);

struct CayleyCheckReport {
  CayleySide side = CayleySide::left;
  int h0_rank = 0;
  HomologyResult h1_total;
  std::vector<HomologyResult> h1_per_component;
  int pi2_rank = 0;            // rank of ker d2 over the rationals
  int relation_term_rank = 0;  // |C2| - pi2_rank
  bool h1_vanishes = false;
  bool h0_expected = false;  // left: rank 1; two-sided: rank |M| classified by products
  bool euler_ok = false;
  bool passed() const { return h1_vanishes && h0_expected && euler_ok; }
};

CayleyCheckReport cayley_homology_check(const CayleyComplex& c);

}  // namespace relbim
