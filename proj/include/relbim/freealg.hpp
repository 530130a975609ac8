#pragma once
// Arithmetic in the free associative algebra over the rationals: finitely
// supported rational combinations of words, with multiplication extending
// concatenation bilinearly.

#include "relbim/numeric.hpp"
#include "relbim/words.hpp"

#include <map>
#include <string>

namespace relbim {

class NcPoly {
 public:
  explicit NcPoly(AlphabetPtr alphabet);

  static NcPoly monomial(const Word& w, const Rat& coeff = Rat(1));
  static NcPoly unit(const AlphabetPtr& alphabet);  // 1 * empty word

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int support_size() const { return static_cast<int>(terms_.size()); }
  Rat coeff(const Word& w) const;

  void add_term(const Word& w, const Rat& c);  // accumulate, dropping zeros

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly operator-() const;

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

  // terms in canonical word order, e.g. "x y - y x"; the unit word prints "1"
  std::string str() const;

 private:
  AlphabetPtr alphabet_;
  std::map<Word, Rat> terms_;
};

NcPoly operator+(NcPoly a, const NcPoly& b);
NcPoly operator-(NcPoly a, const NcPoly& b);
NcPoly operator*(const NcPoly& a, const NcPoly& b);
NcPoly operator*(const Rat& c, NcPoly a);

enum class HomogeneityKind { zero, homogeneous, inhomogeneous };

struct Homogeneity {
  HomogeneityKind kind = HomogeneityKind::zero;
  int degree = 0;  // meaningful only when homogeneous
};

Homogeneity homogeneous_degree(const NcPoly& p);

}  // namespace relbim
