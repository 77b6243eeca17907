#pragma once

#include <optional>
#include <string>
#include <vector>

#include "traces/boundary.hpp"
#include "traces/semilinear.hpp"

namespace traces {

/// A semilinear exponent set over an ordered list of letters, denoting the
/// commutative monomials a_1^{x_1} ... a_k^{x_k} with (x_1,...,x_k) in set.
struct SemilinearMonomial {
  SemilinearSet set;
  std::vector<LetterId> vars;
};

/// One rational factor of an mp-rational term.
struct Factor {
  enum class Kind { Atoms, Star, ClosureStar, Monomial };
  Kind kind;
  std::vector<Trace> traces;  // Atoms / Star / ClosureStar generators
  SemilinearMonomial mono;    // Monomial

  static Factor atoms(std::vector<Trace> ts);
  static Factor star(std::vector<Trace> gens);
  static Factor closureStar(std::vector<Trace> gens);
  static Factor monomial(SemilinearMonomial m);
};

/// A term: a product of rational factors, optionally ending in one boundary
/// point (the mixed product).
struct Term {
  std::vector<Factor> factors;
  std::optional<InfiniteTrace> tail;
};

/// A finite union of terms, denoting L_0 union of L_i X_i. Membership is a
/// depth-bounded probe: a candidate (finite, or eventually periodic probed
/// to the given depth) is matched by bounded search over the factors, with
/// star expansions capped by a letter budget derived from the depth.
class MpRationalExpr {
 public:
  MpRationalExpr(AlphabetPtr alpha, std::vector<Term> terms);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Depth-bounded membership probe. lenCap < 0 picks a cap from the depth.
  bool accepts(const InfiniteTrace& candidate, int depth,
               int lenCap = -1) const;

  /// True iff the expression denotes a finite set (all stars trivial, all
  /// semilinear parts finite).
  bool denotesFiniteSet() const;

  /// Members produced by bounded expansion of every term: star factors up
  /// to starUnroll generators, monomials enumerated up to monoBound.
  std::vector<InfiniteTrace> sampleMembers(int starUnroll,
                                           long long monoBound,
                                           std::size_t maxPerTerm = 200) const;

  std::string str() const;

  /// Re-reads the expression over another alphabet, matching letter names.
  MpRationalExpr embedInto(const AlphabetPtr& target) const;

 private:
  AlphabetPtr alpha_;
  std::vector<Term> terms_;
};

/// Fix of u . (X Phi) = X over one free commutative monoid: for each clique
/// B with content(w_B phi) = B, the affine count system over the letters
/// outside B, as a semilinear monomial times w_B^omega.
/// Throws NotCommutativeComponent if the alphabet is not complete.
MpRationalExpr yFixedSet(const Endomorphism& phiComponent, const Trace& u);

/// Fix Phi for a uniformly continuous endomorphism of a clique-union
/// alphabet, as closure-of-star of the fixed-point generators plus the
/// stabilizing-clique and limit-clique terms.
MpRationalExpr boundaryFixDescription(const Endomorphism& phi);

}  // namespace traces
