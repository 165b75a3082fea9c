#ifndef COVER_WORD_HPP
#define COVER_WORD_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cover {

// A single letter of a free-group word: generator index plus sign.
struct Letter {
  int gen;
  int sign;  // +1 or -1

  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
};

// Registry mapping generator indices to display names. Words over different
// registries must not be mixed; an alphabet whose name list extends another's
// is considered compatible (substitution may enlarge the alphabet).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int add(const std::string& name);
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const;
  std::optional<int> find(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Freely reduced word over an alphabet. Reduction is a representation
// invariant: every constructor and operation returns a reduced word.
// Immutable; safe to share across threads.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  Word(AlphabetPtr alphabet, std::vector<Letter> raw);

  static Word identity(AlphabetPtr alphabet) { return Word(std::move(alphabet)); }
  static Word generator(AlphabetPtr alphabet, int gen, int sign = 1);

  // Parses whitespace-separated tokens with an optional ^-1 suffix;
  // "1" and the empty string denote the identity.
  static Word parse(AlphabetPtr alphabet, const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(int k) const;

  // Replaces every occurrence of target^{+-1} by replacement^{+-1} and
  // reduces. The result lives over the larger of the two alphabets.
  Word substituted(int target, const Word& replacement) const;

  // w = conjugator * core * conjugator^{-1} with core cyclically reduced.
  std::pair<Word, Word> cyclicReduced() const;  // (core, conjugator)

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Display syntax: juxtaposed names, ^-1 for negative sign, "1" if empty.
  std::string str() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// True when the two alphabets may appear in one expression: identical
// object, or one's name list is a prefix of the other's.
bool compatibleAlphabets(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace cover

#endif
