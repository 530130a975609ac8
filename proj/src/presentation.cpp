#include "relbim/presentation.hpp"

#include <cctype>
#include <sstream>

namespace relbim {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

bool is_integer_token(const std::string& t) {
  size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

NcPoly parse_poly_tokens(const AlphabetPtr& alphabet, const std::vector<std::string>& toks,
                         int line) {
  NcPoly p(alphabet);
  size_t i = 0;
  bool any_term = false;
  while (i < toks.size()) {
    Rat sign = 1;
    bool saw_sign = false;
    while (i < toks.size() && (toks[i] == "+" || toks[i] == "-")) {
      if (toks[i] == "-") sign = -sign;
      saw_sign = true;
      ++i;
    }
    if (i == toks.size()) {
      if (saw_sign) throw ParseError(line, "dangling sign in polynomial");
      break;
    }
    Rat coeff = sign;
    if (is_integer_token(toks[i])) {
      coeff = sign * Rat(Int(toks[i]));
      ++i;
    }
    std::vector<int> letters;
    while (i < toks.size() && toks[i] != "+" && toks[i] != "-") {
      const std::string& t = toks[i];
      if (is_integer_token(t))
        throw ParseError(line, "unexpected number \"" + t + "\" inside a term");
      if (t == "1") {
        ++i;  // unit word, contributes no letters
        continue;
      }
      auto idx = alphabet->index_of(t);
      if (!idx) throw ParseError(line, "unknown generator token \"" + t + "\"");
      letters.push_back(*idx);
      ++i;
    }
    p.add_term(Word(alphabet, std::move(letters)), coeff);
    any_term = true;
  }
  if (!any_term) throw ParseError(line, "empty polynomial");
  return p;
}

}  // namespace

NcPoly parse_poly(const AlphabetPtr& alphabet, const std::string& text) {
  return parse_poly_tokens(alphabet, split_tokens(text), 0);
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  std::string kind;
  AlphabetPtr alphabet;
  std::vector<NcPoly> algebra_relations;
  std::vector<std::pair<Word, Word>> monoid_relations;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::string line = raw;
    if (split_tokens(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected \"key: value\"");
    std::string key;
    for (char ch : line.substr(0, colon))
      if (!std::isspace(static_cast<unsigned char>(ch))) key += ch;
    std::string value = line.substr(colon + 1);

    if (key == "kind") {
      auto toks = split_tokens(value);
      if (toks.size() != 1 || (toks[0] != "algebra" && toks[0] != "monoid"))
        throw ParseError(lineno, "kind must be \"algebra\" or \"monoid\"");
      if (!kind.empty()) throw ParseError(lineno, "duplicate kind line");
      kind = toks[0];
    } else if (key == "generators") {
      if (alphabet) throw ParseError(lineno, "duplicate generators line");
      auto toks = split_tokens(value);
      for (const auto& t : toks)
        if (t == "+" || t == "-" || t == "=" || is_integer_token(t))
          throw ParseError(lineno, "generator name \"" + t + "\" collides with syntax");
      try {
        alphabet = make_alphabet(toks);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (key == "relation") {
      if (kind.empty()) throw ParseError(lineno, "relation before kind line");
      if (!alphabet) throw ParseError(lineno, "relation before generators line");
      if (kind == "algebra") {
        NcPoly p = parse_poly_tokens(alphabet, split_tokens(value), lineno);
        if (p.is_zero()) throw ParseError(lineno, "zero relation");
        algebra_relations.push_back(std::move(p));
      } else {
        auto eq = value.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, "monoid relation needs \"<word> = <word>\"");
        Word l(alphabet), r(alphabet);
        try {
          l = word_from_string(alphabet, value.substr(0, eq));
          r = word_from_string(alphabet, value.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
          throw ParseError(lineno, e.what());
        }
        if (l == r) throw ParseError(lineno, "trivial relation (sides are equal)");
        monoid_relations.emplace_back(std::move(l), std::move(r));
      }
    } else {
      throw ParseError(lineno, "unknown key \"" + key + "\"");
    }
  }
  if (kind.empty()) throw ParseError(lineno, "missing kind line");
  if (!alphabet) throw ParseError(lineno, "missing generators line");
  if (kind == "algebra") return AlgebraPresentation{alphabet, std::move(algebra_relations)};
  return MonoidPresentation{alphabet, std::move(monoid_relations)};
}

std::string print_presentation(const AlgebraPresentation& p) {
  std::ostringstream out;
  out << "kind: algebra\n";
  out << "generators:";
  for (const auto& n : p.alphabet->names()) out << ' ' << n;
  out << '\n';
  for (const auto& r : p.relations) out << "relation: " << r.str() << '\n';
  return out.str();
}

std::string print_presentation(const MonoidPresentation& p) {
  std::ostringstream out;
  out << "kind: monoid\n";
  out << "generators:";
  for (const auto& n : p.alphabet->names()) out << ' ' << n;
  out << '\n';
  for (const auto& [l, r] : p.relations)
    out << "relation: " << l.str() << " = " << r.str() << '\n';
  return out.str();
}

std::string print_presentation(const Presentation& p) {
  return std::visit([](const auto& q) { return print_presentation(q); }, p);
}

AlgebraPresentation monoid_to_algebra(const MonoidPresentation& p) {
  AlgebraPresentation out{p.alphabet, {}};
  out.relations.reserve(p.relations.size());
  for (const auto& [l, r] : p.relations) {
    NcPoly q(p.alphabet);
    q.add_term(r, Rat(1));
    q.add_term(l, Rat(-1));
    out.relations.push_back(std::move(q));
  }
  return out;
}

HomogeneityReport homogeneity(const AlgebraPresentation& p) {
  HomogeneityReport rep{PresentationGrading::graded, {}};
  for (const auto& r : p.relations) {
    Homogeneity h = homogeneous_degree(r);
    if (h.kind != HomogeneityKind::homogeneous)
      return {PresentationGrading::inhomogeneous, {}};
    rep.degrees.push_back(h.degree);
  }
  return rep;
}

HomogeneityReport homogeneity(const MonoidPresentation& p) {
  HomogeneityReport rep{PresentationGrading::length_homogeneous, {}};
  for (const auto& [l, r] : p.relations) {
    if (l.length() != r.length()) return {PresentationGrading::inhomogeneous, {}};
    rep.degrees.push_back(l.length());
  }
  return rep;
}

}  // namespace relbim
