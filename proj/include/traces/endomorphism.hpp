#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "traces/trace.hpp"

namespace traces {

/// A witness that the letter condition for uniform continuity fails:
/// c is a first letter of b's image, c is independent of a's whole image,
/// yet a and b are dependent.
struct UcWitness {
  LetterId a, b, c;
};

/// An endomorphism of M(A, I), given by its letter images and validated at
/// construction: images of independent letters must commute. Immutable.
class Endomorphism {
 public:
  static Endomorphism make(AlphabetPtr alpha, std::vector<Trace> images);
  static Endomorphism identity(AlphabetPtr alpha);
  /// pi_B: keeps the letters of B and erases the others.
  static Endomorphism projection(AlphabetPtr alpha, LetterSet keep);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Trace& image(LetterId a) const { return images_[a]; }
  const std::vector<Trace>& images() const { return images_; }

  Trace apply(const Trace& u) const;

  /// Composition "this, then next" (postfix application order).
  Endomorphism then(const Endomorphism& next) const;

  /// u phi^n with orbit cycle detection, so huge exponents cost at most one
  /// orbit cycle. Throws OrbitGrowth past the budget (orbit elements, and a
  /// cap on element length).
  Trace iterateApply(const Trace& u, std::uint64_t n,
                     std::size_t budget = 10000) const;

  /// Lexicographically least violating triple, or nullopt when the
  /// endomorphism is uniformly continuous (equivalently a contraction).
  std::optional<UcWitness> ucWitness() const;
  bool isUniformlyContinuous() const { return !ucWitness(); }

  /// Restriction to the sub-alphabet induced by B; images must stay inside
  /// the submonoid on B. Throws NotClosed otherwise.
  Endomorphism restrict(LetterSet keep) const;

  bool mapsSomeLetterToIdentity() const;
  /// True iff every letter maps to the identity.
  bool isTrivial() const;

  bool operator==(const Endomorphism& other) const {
    return sameAlphabet(alpha_, other.alpha_) && images_ == other.images_;
  }

 private:
  Endomorphism(AlphabetPtr alpha, std::vector<Trace> images)
      : alpha_(std::move(alpha)), images_(std::move(images)) {}

  AlphabetPtr alpha_;
  std::vector<Trace> images_;
};

}  // namespace traces
