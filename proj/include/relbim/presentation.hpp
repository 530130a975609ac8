#pragma once
// Algebra and monoid presentations: the line-oriented file format, validation,
// the monoid-to-algebra conversion (each pair (l, r) becomes the polynomial
// r - l), and homogeneity classification.

#include "relbim/freealg.hpp"
#include "relbim/words.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace relbim {

struct AlgebraPresentation {
  AlphabetPtr alphabet;
  std::vector<NcPoly> relations;  // order is authoritative: it indexes the KR basis
};

struct MonoidPresentation {
  AlphabetPtr alphabet;
  std::vector<std::pair<Word, Word>> relations;  // (l, r) pairs, l != r
};

using Presentation = std::variant<AlgebraPresentation, MonoidPresentation>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// File format (UTF-8, line-oriented, "#" starts a comment):
//   kind: algebra | monoid
//   generators: <tok> <tok> ...
//   relation: <poly>             (algebra)
//   relation: <word> = <word>    (monoid; "1" is the empty word)
Presentation parse_presentation(const std::string& text);

std::string print_presentation(const Presentation& p);
std::string print_presentation(const AlgebraPresentation& p);
std::string print_presentation(const MonoidPresentation& p);

// parse a polynomial in the relation syntax against a fixed alphabet
NcPoly parse_poly(const AlphabetPtr& alphabet, const std::string& text);

AlgebraPresentation monoid_to_algebra(const MonoidPresentation& p);

enum class PresentationGrading { graded, length_homogeneous, inhomogeneous };

struct HomogeneityReport {
  PresentationGrading kind;
  std::vector<int> degrees;  // per-relation degrees when graded
};

HomogeneityReport homogeneity(const AlgebraPresentation& p);
HomogeneityReport homogeneity(const MonoidPresentation& p);

}  // namespace relbim
