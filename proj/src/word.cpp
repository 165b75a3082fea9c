#include "cover/word.hpp"

#include <sstream>

#include "cover/error.hpp"

namespace cover {

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

int Alphabet::add(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end())
    throw Error(ErrorKind::Alphabet, "duplicate generator name: " + name);
  int id = static_cast<int>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

const std::string& Alphabet::name(int i) const {
  if (i < 0 || i >= size())
    throw Error(ErrorKind::Alphabet, "generator index out of range");
  return names_[static_cast<size_t>(i)];
}

std::optional<int> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool compatibleAlphabets(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const auto& na = a->names();
  const auto& nb = b->names();
  const auto& shorter = na.size() <= nb.size() ? na : nb;
  const auto& longer = na.size() <= nb.size() ? nb : na;
  for (size_t i = 0; i < shorter.size(); ++i)
    if (shorter[i] != longer[i]) return false;
  return true;
}

namespace {

void pushReduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Word::Word(AlphabetPtr alphabet, std::vector<Letter> raw)
    : alphabet_(std::move(alphabet)) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!alphabet_ || l.gen < 0 || l.gen >= alphabet_->size())
      throw Error(ErrorKind::Alphabet, "letter index not in alphabet");
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorKind::Alphabet, "letter sign must be +-1");
    pushReduced(letters_, l);
  }
}

Word Word::generator(AlphabetPtr alphabet, int gen, int sign) {
  return Word(std::move(alphabet), {Letter{gen, sign}});
}

Word Word::parse(AlphabetPtr alphabet, const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int sign = 1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    auto idx = alphabet->find(tok);
    if (!idx)
      throw Error(ErrorKind::Alphabet, "unknown generator '" + tok + "'");
    letters.push_back(Letter{*idx, sign});
  }
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::inverse() const {
  Word out(alphabet_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(Letter{it->gen, -it->sign});
  return out;
}

Word Word::operator*(const Word& rhs) const {
  if (!compatibleAlphabets(alphabet_, rhs.alphabet_))
    throw Error(ErrorKind::Alphabet, "alphabet mismatch in concat");
  Word out(alphabet_ && alphabet_->size() >= rhs.alphabet_->size() ? alphabet_
                                                                   : rhs.alphabet_);
  out.letters_ = letters_;
  for (Letter l : rhs.letters_) pushReduced(out.letters_, l);
  return out;
}

Word Word::pow(int k) const {
  Word base = k >= 0 ? *this : inverse();
  Word out(alphabet_);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) out = out * base;
  return out;
}

Word Word::substituted(int target, const Word& replacement) const {
  if (!compatibleAlphabets(alphabet_, replacement.alphabet()))
    throw Error(ErrorKind::Alphabet, "alphabet mismatch in substitute");
  AlphabetPtr wide =
      (!replacement.alphabet() ||
       (alphabet_ && alphabet_->size() >= replacement.alphabet()->size()))
          ? alphabet_
          : replacement.alphabet();
  Word out(wide);
  Word inv = replacement.inverse();
  for (Letter l : letters_) {
    if (l.gen == target) {
      const Word& image = l.sign > 0 ? replacement : inv;
      for (Letter r : image.letters()) pushReduced(out.letters_, r);
    } else {
      pushReduced(out.letters_, l);
    }
  }
  return out;
}

std::pair<Word, Word> Word::cyclicReduced() const {
  size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].gen == letters_[hi - 1].gen &&
         letters_[lo].sign == -letters_[hi - 1].sign) {
    ++lo;
    --hi;
  }
  Word core(alphabet_);
  core.letters_.assign(letters_.begin() + static_cast<long>(lo),
                       letters_.begin() + static_cast<long>(hi));
  Word conj(alphabet_);
  conj.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(lo));
  return {core, conj};
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_->name(letters_[i].gen);
    if (letters_[i].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace cover
