#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace traces {

using LetterId = int;

/// Subset of letters as a bitmask over letter ids (at most 64 letters).
using LetterSet = std::uint64_t;

inline LetterSet letterBit(LetterId a) { return LetterSet{1} << a; }

/// An independence alphabet (A, I): an ordered finite letter set together
/// with a symmetric irreflexive independence relation, i.e. the simple
/// undirected graph Gamma(A, I).
///
/// Letters keep the order in which they were given; every set-valued result
/// in the library follows that order, so output is deterministic.
class Alphabet {
 public:
  /// Builds and validates an alphabet. Rejects reflexive pairs, pairs over
  /// unknown letters, and duplicate letter names.
  static std::shared_ptr<const Alphabet> validate(
      std::vector<std::string> letters,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& name(LetterId a) const { return letters_[a]; }
  const std::vector<std::string>& letters() const { return letters_; }

  std::optional<LetterId> find(std::string_view name) const;
  LetterId require(std::string_view name) const;

  bool independent(LetterId a, LetterId b) const {
    return (indep_[a] >> b) & 1;
  }
  bool dependent(LetterId a, LetterId b) const {
    return a == b || !independent(a, b);
  }
  /// Independence neighbours of a letter.
  LetterSet neighbors(LetterId a) const { return indep_[a]; }
  LetterSet allLetters() const {
    return size() == 64 ? ~LetterSet{0} : (LetterSet{1} << size()) - 1;
  }

  bool isClique(LetterSet members) const;

  /// All nonempty pairwise-independent subsets, ordered by size then
  /// lexicographically on letter order.
  std::vector<LetterSet> cliques() const;

  /// Connected components of Gamma(A, I), each a letter set, ordered by
  /// their smallest letter.
  std::vector<LetterSet> connectedComponents() const;

  /// True iff every connected component induces a complete graph.
  bool isCliqueUnion() const;

  /// True iff Gamma(A, I) has no induced P4, C4, or the fixed 5-vertex
  /// pattern (triangle {a,b,y}, x adjacent only to b, c adjacent to b and y).
  /// The 5-vertex pattern is read off a figure; see docs/cli-reference.md.
  bool isTypeT() const;

  /// Sub-alphabet induced by a letter subset; letter names are kept.
  std::shared_ptr<const Alphabet> induced(LetterSet keep) const;

  bool operator==(const Alphabet& other) const {
    return letters_ == other.letters_ && indep_ == other.indep_;
  }

  std::string describePair(LetterId a, LetterId b) const {
    return "{" + name(a) + "," + name(b) + "}";
  }

 private:
  std::vector<std::string> letters_;
  std::vector<LetterSet> indep_;  // adjacency masks of the independence graph
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool sameAlphabet(const AlphabetPtr& x, const AlphabetPtr& y) {
  return x == y || (x && y && *x == *y);
}

/// Letters of a set in alphabet order.
std::vector<LetterId> setToLetters(LetterSet s);

std::string letterSetToString(const Alphabet& alpha, LetterSet s);

}  // namespace traces
