#include "traces/alphabet.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "traces/errors.hpp"

namespace traces {

std::shared_ptr<const Alphabet> Alphabet::validate(
    std::vector<std::string> letters,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (letters.size() > 64)
    throw Error("alphabets are limited to 64 letters");
  auto alpha = std::make_shared<Alphabet>();
  alpha->letters_ = std::move(letters);
  for (std::size_t i = 0; i < alpha->letters_.size(); ++i)
    for (std::size_t j = i + 1; j < alpha->letters_.size(); ++j)
      if (alpha->letters_[i] == alpha->letters_[j])
        throw Error("duplicate letter '" + alpha->letters_[i] + "'");
  alpha->indep_.assign(alpha->letters_.size(), 0);
  for (const auto& [x, y] : pairs) {
    const LetterId a = alpha->require(x);
    const LetterId b = alpha->require(y);
    if (a == b) throw ReflexivePair(x);
    alpha->indep_[a] |= letterBit(b);
    alpha->indep_[b] |= letterBit(a);
  }
  return alpha;
}

std::optional<LetterId> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return static_cast<LetterId>(i);
  return std::nullopt;
}

LetterId Alphabet::require(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw UnknownLetter(std::string(name));
}

bool Alphabet::isClique(LetterSet members) const {
  for (LetterId a : setToLetters(members)) {
    const LetterSet others = members & ~letterBit(a);
    if ((indep_[a] & others) != others) return false;
  }
  return members != 0;
}

std::vector<LetterSet> Alphabet::cliques() const {
  std::vector<LetterSet> out;
  const LetterSet all = allLetters();
  for (LetterSet s = 1; s <= all && s != 0; ++s)
    if (isClique(s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](LetterSet x, LetterSet y) {
    const int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    // Lexicographic on letter order: smaller lowest letter first.
    return x < y;
  });
  return out;
}

std::vector<LetterSet> Alphabet::connectedComponents() const {
  std::vector<LetterSet> out;
  LetterSet seen = 0;
  for (LetterId a = 0; a < size(); ++a) {
    if (seen & letterBit(a)) continue;
    LetterSet comp = letterBit(a);
    LetterSet frontier = comp;
    while (frontier) {
      LetterSet next = 0;
      for (LetterId b : setToLetters(frontier)) next |= indep_[b];
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool Alphabet::isCliqueUnion() const {
  for (LetterSet comp : connectedComponents())
    if (!isClique(comp)) return false;
  return true;
}

namespace {

struct Pattern {
  int order;
  std::vector<std::pair<int, int>> edges;
};

// Forbidden induced subgraphs of type-T alphabets: P4, C4, and the
// 5-vertex figure (vertices a,b,x,y,c; triangle a-b-y, pendant x on b,
// c adjacent to exactly b and y).
const std::array<Pattern, 3>& forbiddenPatterns() {
  static const std::array<Pattern, 3> pats = {{
      {4, {{0, 1}, {1, 2}, {2, 3}}},
      {4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}},
      {5, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {1, 4}, {3, 4}}},
  }};
  return pats;
}

bool inducedMatch(const Alphabet& alpha, const std::vector<LetterId>& verts,
                  const Pattern& pat) {
  std::vector<int> perm(verts.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < verts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < verts.size() && ok; ++j) {
        const bool patEdge =
            std::find(pat.edges.begin(), pat.edges.end(),
                      std::make_pair(static_cast<int>(std::min(perm[i], perm[j])),
                                     static_cast<int>(std::max(perm[i], perm[j])))) !=
            pat.edges.end();
        if (alpha.independent(verts[i], verts[j]) != patEdge) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool hasInduced(const Alphabet& alpha, const Pattern& pat) {
  const int n = alpha.size();
  if (n < pat.order) return false;
  std::vector<LetterId> verts(pat.order);
  // Enumerate vertex subsets of the pattern's order.
  std::vector<int> idx(pat.order);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    for (int i = 0; i < pat.order; ++i) verts[i] = idx[i];
    if (inducedMatch(alpha, verts, pat)) return true;
    int i = pat.order - 1;
    while (i >= 0 && idx[i] == n - pat.order + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < pat.order; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

}  // namespace

bool Alphabet::isTypeT() const {
  for (const Pattern& pat : forbiddenPatterns())
    if (hasInduced(*this, pat)) return false;
  return true;
}

std::shared_ptr<const Alphabet> Alphabet::induced(LetterSet keep) const {
  std::vector<std::string> names;
  for (LetterId a : setToLetters(keep)) names.push_back(name(a));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (LetterId a : setToLetters(keep))
    for (LetterId b : setToLetters(keep & indep_[a]))
      if (a < b) pairs.emplace_back(name(a), name(b));
  return validate(std::move(names), pairs);
}

std::vector<LetterId> setToLetters(LetterSet s) {
  std::vector<LetterId> out;
  while (s) {
    const int a = std::countr_zero(s);
    out.push_back(a);
    s &= s - 1;
  }
  return out;
}

std::string letterSetToString(const Alphabet& alpha, LetterSet s) {
  std::string out = "{";
  bool first = true;
  for (LetterId a : setToLetters(s)) {
    if (!first) out += ",";
    out += alpha.name(a);
    first = false;
  }
  return out + "}";
}

}  // namespace traces
