#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "traces/endomorphism.hpp"

namespace traces {

/// A finite generating set together with the recursion trace that produced
/// it (which case of the induction fired at each level).
struct GeneratorSet {
  std::vector<Trace> generators;   // nontrivial, sorted by (length, fnf)
  std::vector<std::string> provenance;
  std::uint64_t exponent = 1;      // certified m for periodic results
};

/// A_0: the letters lying on a cycle of the functional letter graph.
/// Requires that no letter maps to the identity.
LetterSet periodicLetters(const Endomorphism& phi);

/// A finite G with <G> = Fix phi, by the three-case recursion on |A|.
GeneratorSet fixGenerators(const Endomorphism& phi);

/// A finite G with <G> = Per phi = Fix phi^m. The certified exponent is
/// m = |A|! by default; useLcm switches to lcm(1..|A|), which is also a
/// multiple of every letter-permutation order.
GeneratorSet perGenerators(const Endomorphism& phi, bool useLcm = false);

/// All traces of length <= maxlen, in (length, fnf) order.
std::vector<Trace> enumerateTraces(const AlphabetPtr& alpha, int maxlen);

/// Brute-force oracles: all u with |u| <= maxlen and u phi = u
/// (resp. u phi^n = u for some 1 <= n <= maxexp).
std::set<Trace> fixOracle(const Endomorphism& phi, int maxlen);
std::set<Trace> perOracle(const Endomorphism& phi, int maxlen, int maxexp);

/// All elements of <G> of length <= maxlen. Throws TrivialGenerator if the
/// identity is among the generators.
std::set<Trace> submonoidBall(const AlphabetPtr& alpha,
                              const std::vector<Trace>& gens, int maxlen);

/// Optional reduction: drops a generator when it is a product of the others
/// of bounded total length.
std::vector<Trace> reduceGenerators(const std::vector<Trace>& gens,
                                    int lenBound);

std::uint64_t factorial(int n);
std::uint64_t lcmUpTo(int n);

}  // namespace traces
