#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "traces/alphabet.hpp"

namespace traces {

/// Exact dyadic distance 2^{-exponent}, with zero as a separate flag
/// (the convention 2^{-infinity} = 0).
struct Distance {
  bool zero = false;
  int exponent = 0;  // meaningful only when !zero

  static Distance zeroDistance() { return {true, 0}; }
  static Distance ofExponent(int r) { return {false, r}; }

  bool operator==(const Distance&) const = default;
  bool operator<=(const Distance& other) const {
    if (zero) return true;
    if (other.zero) return false;
    return exponent >= other.exponent;
  }
  std::string str() const {
    return zero ? "0" : "2^-" + std::to_string(exponent);
  }
};

Distance maxDistance(Distance a, Distance b);

/// An element of the trace monoid M(A, I), stored canonically as its Foata
/// normal form: a sequence of cliques where every letter of a clique depends
/// on some letter of the previous clique. The empty sequence is the
/// identity. Values are immutable; equality is structural on the FNF.
class Trace {
 public:
  static Trace identity(AlphabetPtr alpha);
  static Trace fromWord(AlphabetPtr alpha, std::span<const LetterId> word);
  /// Parses whitespace-separated letter tokens; a contiguous string is
  /// accepted when every letter name is a single character.
  static Trace fromWord(AlphabetPtr alpha, std::string_view word);
  static Trace singleLetter(AlphabetPtr alpha, LetterId a);
  static Trace ofClique(AlphabetPtr alpha, LetterSet clique);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<LetterSet>& fnf() const { return fnf_; }

  bool isIdentity() const { return fnf_.empty(); }
  /// Number of letters (the trace's length).
  int length() const;
  /// Number of cliques in the FNF (the trace's height).
  int height() const { return static_cast<int>(fnf_.size()); }

  /// Letters in FNF order, letters within a clique in alphabet order.
  std::vector<LetterId> letters() const;

  Trace multiply(const Trace& other) const;
  Trace operator*(const Trace& other) const { return multiply(other); }
  Trace pow(int n) const;

  int count(LetterId a) const;
  LetterSet content() const;
  bool independentWith(const Trace& other) const;

  /// Image under pi_B, as a trace over the sub-alphabet induced by keep.
  Trace project(LetterSet keep) const;

  bool isPrefixOf(const Trace& other) const;
  /// The unique w with other = this * w. Throws NotAPrefix.
  Trace prefixQuotient(const Trace& other) const;

  /// Longest common FNF clique prefix; nullopt means the traces are equal.
  std::optional<int> agreement(const Trace& other) const;
  Distance distance(const Trace& other) const;

  /// Re-reads this trace over another alphabet, matching letters by name.
  Trace embed(AlphabetPtr target) const;

  bool operator==(const Trace& other) const;
  bool operator!=(const Trace& other) const { return !(*this == other); }
  /// Orders by (length, fnf); only meaningful within one alphabet.
  bool operator<(const Trace& other) const;

  /// Prints as "{a,b}{a}"; the identity prints as "{}".
  std::string str() const;

  /// Checks the FNF invariants; used by tests.
  bool validFnf() const;

  void requireSameAlphabet(const Trace& other) const;

 private:
  Trace(AlphabetPtr alpha, std::vector<LetterSet> fnf)
      : alpha_(std::move(alpha)), fnf_(std::move(fnf)) {}

  AlphabetPtr alpha_;
  std::vector<LetterSet> fnf_;
};

/// Equality via the projection criterion: u = v iff their projections to
/// every dependent pair {a,b} (including a = b) agree.
bool equalsViaProjections(const Trace& u, const Trace& v);

}  // namespace traces
