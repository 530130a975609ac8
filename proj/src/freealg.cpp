#include "relbim/freealg.hpp"

#include <sstream>
#include <stdexcept>

namespace relbim {

namespace {
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
}  // namespace

NcPoly::NcPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("polynomial: null alphabet");
}

NcPoly NcPoly::monomial(const Word& w, const Rat& coeff) {
  NcPoly p(w.alphabet());
  p.add_term(w, coeff);
  return p;
}

NcPoly NcPoly::unit(const AlphabetPtr& alphabet) {
  return monomial(Word(alphabet), Rat(1));
}

Rat NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rat& c) {
  if (!same_alphabet(w.alphabet(), alphabet_))
    throw std::invalid_argument("polynomial: alphabet mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  if (!same_alphabet(alphabet_, o.alphabet_))
    throw std::invalid_argument("polynomial add: alphabet mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  if (!same_alphabet(alphabet_, o.alphabet_))
    throw std::invalid_argument("polynomial add: alphabet mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly p(alphabet_);
  for (const auto& [w, c] : terms_) p.terms_.emplace(w, Rat(-c));
  return p;
}

NcPoly operator+(NcPoly a, const NcPoly& b) {
  a += b;
  return a;
}

NcPoly operator-(NcPoly a, const NcPoly& b) {
  a -= b;
  return a;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    throw std::invalid_argument("polynomial mul: alphabet mismatch");
  NcPoly p(a.alphabet());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) p.add_term(concat(u, v), cu * cv);
  return p;
}

NcPoly operator*(const Rat& c, NcPoly a) {
  NcPoly p(a.alphabet());
  if (c == 0) return p;
  for (const auto& [w, cw] : a.terms()) p.add_term(w, c * cw);
  return p;
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    bool unit_coeff = (a == 1);
    if (first) {
      // a bare "-" must stay its own token when no number follows
      if (neg) out << (unit_coeff && !w.empty() ? "- " : "-");
    } else {
      out << (neg ? " - " : " + ");
    }
    if (!unit_coeff || w.empty()) {
      out << numerator(a);
      if (denominator(a) != 1) out << '/' << denominator(a);
      if (!w.empty()) out << ' ';
    }
    if (!w.empty()) out << w.str();
    first = false;
  }
  return out.str();
}

Homogeneity homogeneous_degree(const NcPoly& p) {
  if (p.is_zero()) return {HomogeneityKind::zero, 0};
  int d = p.terms().begin()->first.length();
  for (const auto& [w, c] : p.terms())
    if (w.length() != d) return {HomogeneityKind::inhomogeneous, 0};
  return {HomogeneityKind::homogeneous, d};
}

}  // namespace relbim
