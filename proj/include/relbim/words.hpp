#pragma once
// Generator alphabets and words of the free monoid X*. The canonical order
// (length first, then lex by generator index) fixes every basis indexing
// downstream, so all matrices are bit-reproducible.

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relbim {

class Alphabet {
 public:
  // names must be non-empty, pairwise distinct and none may be the
  // reserved unit token "1"
  explicit Alphabet(std::vector<std::string> generators);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> generators);

// true when both pointers refer to alphabets with identical generator lists
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

// A word stores indices into its alphabet; symbol text lives in Alphabet only.
// The empty word is the monoid identity.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  Word(AlphabetPtr alphabet, std::vector<int> letters);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int letter(int i) const { return letters_.at(i); }

  Word prefix(int n) const;       // first n letters
  Word suffix(int from) const;    // letters from position `from` on

  std::string str() const;        // space-separated names, "1" when empty

  std::strong_ordering operator<=>(const Word& o) const;
  bool operator==(const Word& o) const { return letters_ == o.letters_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<int> letters_;
};

// all |X|^d words of length d, in canonical order
std::vector<Word> enumerate_words(const AlphabetPtr& alphabet, int degree);

Word concat(const Word& u, const Word& v);

// all factorizations w = u * pattern * v, ordered by |u|;
// overlapping occurrences are all reported; pattern must be non-empty
std::vector<std::pair<Word, Word>> occurrences(const Word& w, const Word& pattern);

// position of w within enumerate_words(alphabet, w.length())
long long lex_rank(const Word& w);

// parse a space-separated word ("1" denotes the empty word)
Word word_from_string(const AlphabetPtr& alphabet, const std::string& text);

}  // namespace relbim
