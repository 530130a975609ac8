#pragma once
// Degree-by-degree construction of the modules and maps attached to a graded
// algebra presentation: powers of the relation ideal J, coset bases of
// A = KX*/J, the kernel H of alpha(u (x) r (x) v) = u r v, the bracket
// sub-bimodule D, pi2 = H/D, and exact-sequence checks for the four-term
// derivation sequence and the relation-bimodule sequence.

#include "relbim/freealg.hpp"
#include "relbim/linalg.hpp"
#include "relbim/presentation.hpp"
#include "relbim/words.hpp"

#include <map>
#include <optional>
#include <vector>

namespace relbim {

// one labeled monomial of a tensor space; mid is a relation index, a
// generator index, or -1 when the middle slot is absent
struct TensorCell {
  Word left;
  int mid;
  Word right;
  auto operator<=>(const TensorCell&) const = default;
};

class TensorBasis {
 public:
  void push(TensorCell c);
  int dim() const { return static_cast<int>(cells_.size()); }
  const std::vector<TensorCell>& cells() const { return cells_; }
  int index_of(const TensorCell& c) const;  // throws if absent
  std::optional<int> find(const TensorCell& c) const;

 private:
  std::vector<TensorCell> cells_;
  std::map<TensorCell, int> index_;
};

// [r_i, u, r_j] = 1 (x) r_i (x) u r_j  -  r_i u (x) r_j (x) 1,
// expanded over labeled tensor monomials (word, relation index, word)
std::map<TensorCell, Rat> bracket_terms(const std::vector<NcPoly>& relations, int i,
                                        const Word& u, int j);

struct MuFreenessReport {
  int degree = 0;
  int dim_triples = 0;  // (KX* (x) KX (x) KX*)_d
  int dim_pairs = 0;    // (KX* (x) KX*)_d
  int dim_words = 0;    // KX*_d
  int rank_embed = 0;
  int rank_mul = 0;
  bool injective = false;
  bool composite_zero = false;
  bool image_is_kernel = false;
  bool passed() const { return injective && composite_zero && image_is_kernel; }
};

// degree-d check that x (x) 1 - 1 (x) x freely generate the kernel of the
// multiplication map; depends only on the alphabet
MuFreenessReport mu_kernel_freeness_check(const AlphabetPtr& alphabet, int d);

struct AlgebraComponent {
  int dim = 0;
  std::vector<Word> representatives;      // canonical coset representative words
  std::vector<int> col_to_rep;            // word rank -> representative index, -1 on pivots
};

struct Pi2Result {
  int dim = 0;
  std::vector<QVec> representatives;  // H-basis vectors completing D
};

struct BergmanDicksReport {
  int degree = 0;
  int dim_jj2 = 0, dim_axa = 0, dim_aa = 0, dim_a = 0;
  int rank_d2 = 0, rank_d1 = 0, rank_mu = 0;
  bool derivation_well_defined = false;
  bool composites_zero = false;
  bool d2_injective = false;
  bool exact_at_axa = false;
  bool exact_at_aa = false;
  bool mu_surjective = false;
  bool passed() const {
    return derivation_well_defined && composites_zero && d2_injective && exact_at_axa &&
           exact_at_aa && mu_surjective;
  }
};

struct PgsReport {
  int degree = 0;
  int dim_akra = 0, dim_jj2 = 0;
  int rank_beta = 0, dim_ker_beta = 0, pi2_dim = 0, dim_h_classes = 0;
  bool beta_surjective = false;
  bool kernel_matches_pi2 = false;
  bool d_classes_vanish = false;
  bool h_classes_fill_kernel = false;
  bool passed() const {
    return beta_surjective && kernel_matches_pi2 && d_classes_vanish && h_classes_fill_kernel;
  }
};

struct ConnectingReport {
  int degree = 0;
  int image_count = 0;
  int dim_image_span = 0;  // span of images together with (JH+HJ)_d
  int dim_d = 0;
  bool images_in_h = false;
  bool span_matches_d = false;
  bool jcube_into_jhhj = false;
  bool passed() const { return images_in_h && span_matches_d && jcube_into_jhhj; }
};

struct DegreeDims {
  int j = 0, jsq = 0, jcube = 0, a = 0, fr = 0, h = 0, d = 0, pi2 = 0, ker_beta = 0;
};

struct DegreeReport {
  int degree = 0;
  DegreeDims dims;
  bool bd_exact = false;
  bool pgs_exact = false;
  bool connecting = false;
  bool containment = false;
  bool passed() const { return bd_exact && pgs_exact && connecting && containment; }
};

class GradedVerifier {
 public:
  // throws std::invalid_argument unless every relation is homogeneous
  explicit GradedVerifier(AlgebraPresentation pres);

  const AlgebraPresentation& presentation() const { return pres_; }
  int relation_degree(int i) const { return rel_deg_.at(i); }

  // reduced basis of (J^m)_d inside KX*_d, m = 1, 2, 3
  const Subspace& ideal_power_component(int m, int d);
  const AlgebraComponent& algebra_component(int d);
  const TensorBasis& fr_basis(int d);  // (KX* (x) KR (x) KX*)_d
  // kernel vectors of alpha_d, i.e. a basis of H_d in fr_basis coordinates
  const std::vector<QVec>& homotopy_kernel(int d);
  // class of a word in representative coordinates of its own degree
  const QVec& word_class(const Word& w);

  QVec bracket(int i, const Word& u, int j);  // in fr_basis coords of its degree

  const Subspace& d_component(int d);        // D_d as a subspace of (F_R)_d
  const std::vector<QVec>& d_spanning(int d);
  const Subspace& jh_hj_component(int d);    // (J H + H J)_d
  bool jh_hj_contained_in_d(int d);

  Pi2Result pi2_component(int d);
  BergmanDicksReport bergman_dicks_check(int d);
  PgsReport pgs_check(int d);
  ConnectingReport connecting_map_check(int d);
  DegreeReport verify_degree(int d);

 private:
  struct DData {
    Subspace span;
    std::vector<QVec> spanning;
    bool in_kernel = false;
  };

  const std::vector<Word>& words(int d);
  long long word_dim(int d) const;
  QVec poly_to_vec(const NcPoly& p, int d) const;
  const QMatrix& alpha(int d);
  const DData& d_data(int d);
  // relation-bimodule basis: J-rows completing (J^2)_d, with J^2-reduced residuals
  struct JJ2Data {
    std::vector<QVec> reps;       // vectors in KX*_d coordinates
    std::vector<QVec> residuals;  // reps reduced modulo (J^2)_d
  };
  const JJ2Data& jj2_basis(int d);
  // coordinates of z (in J_d) over the relation-bimodule basis, modulo J^2
  QVec jj2_coords(int d, const QVec& z);
  // class map (F_R)_d -> (A (x) KR (x) A)_d induced by coset reduction
  QVec kappa(int d, const QVec& v, const TensorBasis& akra);
  TensorBasis akra_basis(int d);

  AlgebraPresentation pres_;
  std::vector<int> rel_deg_;

  std::map<int, std::vector<Word>> words_;
  std::map<std::pair<int, int>, Subspace> jpow_;
  std::map<int, AlgebraComponent> areps_;
  std::map<int, TensorBasis> frbasis_;
  std::map<int, QMatrix> alpha_;
  std::map<int, std::vector<QVec>> hbasis_;
  std::map<int, std::map<Word, QVec>> word_class_;
  std::map<int, DData> dcomp_;
  std::map<int, Subspace> jhhj_;
  std::map<int, bool> jhhj_in_d_;
  std::map<int, JJ2Data> jj2_;
  std::map<int, Pi2Result> pi2_;
};

}  // namespace relbim
