#include "relbim/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace relbim {

Alphabet::Alphabet(std::vector<std::string> generators) : names_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("alphabet: empty generator name");
    if (n == "1") throw std::invalid_argument("alphabet: \"1\" is reserved for the unit");
    if (!seen.insert(n).second)
      throw std::invalid_argument("alphabet: duplicate generator \"" + n + "\"");
  }
}

std::optional<int> Alphabet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<std::string> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word: null alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<int> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw std::invalid_argument("word: null alphabet");
  for (int x : letters_)
    if (x < 0 || x >= alphabet_->size())
      throw std::invalid_argument("word: letter index out of range");
}

Word Word::prefix(int n) const {
  return Word(alphabet_, std::vector<int>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(int from) const {
  return Word(alphabet_, std::vector<int>(letters_.begin() + from, letters_.end()));
}

std::string Word::str() const {
  if (empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << alphabet_->name(letters_[i]);
  }
  return out.str();
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return letters_ <=> o.letters_;
}

std::vector<Word> enumerate_words(const AlphabetPtr& alphabet, int degree) {
  if (degree < 0) throw std::invalid_argument("enumerate_words: negative degree");
  std::vector<Word> out;
  const int n = alphabet->size();
  if (degree == 0) {
    out.emplace_back(alphabet);
    return out;
  }
  if (n == 0) return out;
  std::vector<int> w(degree, 0);
  while (true) {
    out.emplace_back(alphabet, w);
    int i = degree - 1;
    while (i >= 0 && w[i] == n - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet()))
    throw std::invalid_argument("concat: alphabet mismatch");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(letters));
}

std::vector<std::pair<Word, Word>> occurrences(const Word& w, const Word& pattern) {
  if (pattern.empty()) throw std::invalid_argument("occurrences: empty pattern");
  if (!same_alphabet(w.alphabet(), pattern.alphabet()))
    throw std::invalid_argument("occurrences: alphabet mismatch");
  std::vector<std::pair<Word, Word>> out;
  const auto& wl = w.letters();
  const auto& pl = pattern.letters();
  if (wl.size() < pl.size()) return out;
  for (size_t i = 0; i + pl.size() <= wl.size(); ++i) {
    if (std::equal(pl.begin(), pl.end(), wl.begin() + i))
      out.emplace_back(w.prefix(static_cast<int>(i)),
                       w.suffix(static_cast<int>(i + pl.size())));
  }
  return out;
}

long long lex_rank(const Word& w) {
  const long long n = w.alphabet()->size();
  long long r = 0;
  for (int x : w.letters()) r = r * n + x;
  return r;
}

Word word_from_string(const AlphabetPtr& alphabet, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> letters;
  bool saw_unit = false;
  while (in >> tok) {
    if (tok == "1") {
      saw_unit = true;
      continue;  // unit token contributes no letters
    }
    auto idx = alphabet->index_of(tok);
    if (!idx) throw std::invalid_argument("unknown generator \"" + tok + "\"");
    letters.push_back(*idx);
  }
  if (letters.empty() && !saw_unit)
    throw std::invalid_argument("empty word (write \"1\")");
  return Word(alphabet, std::move(letters));
}

}  // namespace relbim
