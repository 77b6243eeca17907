#include "traces/trace.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "traces/errors.hpp"

namespace traces {

Distance maxDistance(Distance a, Distance b) {
  if (a.zero) return b;
  if (b.zero) return a;
  return Distance::ofExponent(std::min(a.exponent, b.exponent));
}

Trace Trace::identity(AlphabetPtr alpha) { return Trace(std::move(alpha), {}); }

Trace Trace::fromWord(AlphabetPtr alpha, std::span<const LetterId> word) {
  // Each occurrence gets height 1 + max height among earlier dependent
  // occurrences (same letter counts as dependent); cliques group by height.
  std::vector<int> maxHeight(alpha->size(), 0);
  std::vector<LetterSet> fnf;
  for (LetterId a : word) {
    if (a < 0 || a >= alpha->size()) throw UnknownLetter(std::to_string(a));
    int h = 0;
    for (LetterId b = 0; b < alpha->size(); ++b)
      if (alpha->dependent(a, b)) h = std::max(h, maxHeight[b]);
    ++h;
    maxHeight[a] = h;
    if (static_cast<int>(fnf.size()) < h) fnf.resize(h, 0);
    fnf[h - 1] |= letterBit(a);
  }
  return Trace(std::move(alpha), std::move(fnf));
}

Trace Trace::fromWord(AlphabetPtr alpha, std::string_view word) {
  std::vector<LetterId> ids;
  bool allSingle = true;
  for (const auto& name : alpha->letters())
    if (name.size() != 1) allSingle = false;
  if (allSingle) {
    for (char c : word) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      ids.push_back(alpha->require(std::string_view(&c, 1)));
    }
  } else {
    std::istringstream in{std::string(word)};
    std::string tok;
    while (in >> tok) ids.push_back(alpha->require(tok));
  }
  return fromWord(std::move(alpha), std::span<const LetterId>(ids));
}

Trace Trace::singleLetter(AlphabetPtr alpha, LetterId a) {
  const LetterId w[] = {a};
  return fromWord(std::move(alpha), std::span<const LetterId>(w));
}

Trace Trace::ofClique(AlphabetPtr alpha, LetterSet clique) {
  if (!alpha->isClique(clique))
    throw Error("letter set " + letterSetToString(*alpha, clique) +
                " is not a clique");
  return Trace(std::move(alpha), {clique});
}

int Trace::length() const {
  int n = 0;
  for (LetterSet b : fnf_) n += std::popcount(b);
  return n;
}

std::vector<LetterId> Trace::letters() const {
  std::vector<LetterId> out;
  for (LetterSet b : fnf_)
    for (LetterId a : setToLetters(b)) out.push_back(a);
  return out;
}

Trace Trace::multiply(const Trace& other) const {
  requireSameAlphabet(other);
  std::vector<LetterId> word = letters();
  const std::vector<LetterId> rest = other.letters();
  word.insert(word.end(), rest.begin(), rest.end());
  return fromWord(alpha_, std::span<const LetterId>(word));
}

Trace Trace::pow(int n) const {
  Trace out = identity(alpha_);
  std::vector<LetterId> word;
  const std::vector<LetterId> base = letters();
  for (int i = 0; i < n; ++i)
    word.insert(word.end(), base.begin(), base.end());
  return fromWord(alpha_, std::span<const LetterId>(word));
}

int Trace::count(LetterId a) const {
  int n = 0;
  for (LetterSet b : fnf_) n += (b >> a) & 1;
  return n;
}

LetterSet Trace::content() const {
  LetterSet s = 0;
  for (LetterSet b : fnf_) s |= b;
  return s;
}

bool Trace::independentWith(const Trace& other) const {
  requireSameAlphabet(other);
  for (LetterId a : setToLetters(content()))
    for (LetterId b : setToLetters(other.content()))
      if (alpha_->dependent(a, b)) return false;
  return true;
}

Trace Trace::project(LetterSet keep) const {
  if ((keep & ~alpha_->allLetters()) != 0)
    throw UnknownLetter("letter outside alphabet in projection set");
  AlphabetPtr sub = alpha_->induced(keep);
  std::vector<LetterId> word;
  for (LetterId a : letters())
    if (keep & letterBit(a)) word.push_back(*sub->find(alpha_->name(a)));
  return fromWord(std::move(sub), std::span<const LetterId>(word));
}

namespace {

// Removes the first occurrence of a minimal letter a (a in the first clique
// of the FNF) and renormalizes.
Trace cancelFirst(const Trace& t, LetterId a) {
  std::vector<LetterId> word = t.letters();
  auto it = std::find(word.begin(), word.end(), a);
  word.erase(it);
  return Trace::fromWord(t.alphabet(), std::span<const LetterId>(word));
}

}  // namespace

bool Trace::isPrefixOf(const Trace& other) const {
  requireSameAlphabet(other);
  Trace rest = other;
  for (LetterId a : letters()) {
    if (rest.fnf().empty() || !(rest.fnf().front() & letterBit(a)))
      return false;
    rest = cancelFirst(rest, a);
  }
  return true;
}

Trace Trace::prefixQuotient(const Trace& other) const {
  requireSameAlphabet(other);
  Trace rest = other;
  for (LetterId a : letters()) {
    if (rest.fnf().empty() || !(rest.fnf().front() & letterBit(a)))
      throw NotAPrefix();
    rest = cancelFirst(rest, a);
  }
  return rest;
}

std::optional<int> Trace::agreement(const Trace& other) const {
  requireSameAlphabet(other);
  if (fnf_ == other.fnf_) return std::nullopt;
  int r = 0;
  const std::size_t n = std::min(fnf_.size(), other.fnf_.size());
  while (static_cast<std::size_t>(r) < n &&
         fnf_[r] == other.fnf_[r])
    ++r;
  return r;
}

Distance Trace::distance(const Trace& other) const {
  auto r = agreement(other);
  return r ? Distance::ofExponent(*r) : Distance::zeroDistance();
}

Trace Trace::embed(AlphabetPtr target) const {
  std::vector<LetterId> word;
  for (LetterId a : letters()) word.push_back(target->require(alpha_->name(a)));
  return fromWord(std::move(target), std::span<const LetterId>(word));
}

bool Trace::operator==(const Trace& other) const {
  return sameAlphabet(alpha_, other.alpha_) && fnf_ == other.fnf_;
}

bool Trace::operator<(const Trace& other) const {
  const int la = length(), lb = other.length();
  if (la != lb) return la < lb;
  return fnf_ < other.fnf_;
}

std::string Trace::str() const {
  if (fnf_.empty()) return "{}";
  std::string out;
  for (LetterSet b : fnf_) out += letterSetToString(*alpha_, b);
  return out;
}

bool Trace::validFnf() const {
  for (std::size_t i = 0; i < fnf_.size(); ++i) {
    if (!alpha_->isClique(fnf_[i])) return false;
    if (i == 0) continue;
    for (LetterId a : setToLetters(fnf_[i])) {
      bool anchored = false;
      for (LetterId b : setToLetters(fnf_[i - 1]))
        if (alpha_->dependent(a, b)) anchored = true;
      if (!anchored) return false;
    }
  }
  return true;
}

void Trace::requireSameAlphabet(const Trace& other) const {
  if (!sameAlphabet(alpha_, other.alpha_)) throw AlphabetMismatch();
}

bool equalsViaProjections(const Trace& u, const Trace& v) {
  u.requireSameAlphabet(v);
  const Alphabet& alpha = *u.alphabet();
  for (LetterId a = 0; a < alpha.size(); ++a)
    for (LetterId b = a; b < alpha.size(); ++b) {
      if (a != b && alpha.independent(a, b)) continue;
      const LetterSet pair = letterBit(a) | letterBit(b);
      if (u.project(pair) != v.project(pair)) return false;
    }
  return true;
}

}  // namespace traces
