#include "traces/fixpoints.hpp"

#include <algorithm>
#include <numeric>

#include "traces/errors.hpp"

namespace traces {

std::uint64_t factorial(int n) {
  if (n > 20) throw Error("factorial exponent overflows 64 bits");
  std::uint64_t m = 1;
  for (int i = 2; i <= n; ++i) m *= static_cast<std::uint64_t>(i);
  return m;
}

std::uint64_t lcmUpTo(int n) {
  std::uint64_t m = 1;
  for (int i = 2; i <= n; ++i) m = std::lcm(m, static_cast<std::uint64_t>(i));
  return m;
}

LetterSet periodicLetters(const Endomorphism& phi) {
  const Alphabet& alpha = *phi.alphabet();
  if (phi.mapsSomeLetterToIdentity())
    throw PreconditionViolated("some letter maps to the identity");
  LetterSet a0 = 0;
  for (LetterId a = 0; a < alpha.size(); ++a) {
    // Image lengths are nondecreasing, so an orbit leaving single letters
    // never returns; single-letter orbits revisit within |A| steps.
    LetterId x = a;
    for (int step = 0; step < alpha.size(); ++step) {
      const Trace& img = phi.image(x);
      if (img.length() != 1) { x = -1; break; }
      x = img.letters().front();
      if (x == a) break;
    }
    if (x == a) a0 |= letterBit(a);
  }
  return a0;
}

namespace {

void sortGenerators(std::vector<Trace>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

std::string letterSetNames(const Alphabet& alpha, LetterSet s) {
  return letterSetToString(alpha, s);
}

// Case III data: A_1 = letters erased by phi, phi'' = (phi pi)|_{M''}.
struct CaseIii {
  LetterSet a1, a2;
  Endomorphism phi2;
};

CaseIii caseIiiData(const Endomorphism& phi) {
  const Alphabet& alpha = *phi.alphabet();
  LetterSet a1 = 0;
  for (LetterId a = 0; a < alpha.size(); ++a)
    if (phi.image(a).isIdentity()) a1 |= letterBit(a);
  const LetterSet a2 = alpha.allLetters() & ~a1;
  Endomorphism pi = Endomorphism::projection(phi.alphabet(), a2);
  return CaseIii{a1, a2, phi.then(pi).restrict(a2)};
}

std::vector<Trace> fixGeneratorsRec(const Endomorphism& phi,
                                    std::vector<std::string>& prov) {
  const AlphabetPtr& alpha = phi.alphabet();
  if (alpha->size() == 0) {
    prov.push_back("empty alphabet: Fix = {1}");
    return {};
  }
  if (phi.mapsSomeLetterToIdentity()) {
    const CaseIii c = caseIiiData(phi);
    prov.push_back("case III: A1 = " + letterSetNames(*alpha, c.a1) +
                   ", recurse on A2 = " + letterSetNames(*alpha, c.a2));
    std::vector<Trace> out;
    for (const Trace& g : fixGeneratorsRec(c.phi2, prov)) {
      Trace lifted = phi.apply(g.embed(alpha));
      if (!lifted.isIdentity()) out.push_back(std::move(lifted));
    }
    sortGenerators(out);
    return out;
  }
  const LetterSet a0 = periodicLetters(phi);
  if (a0 == alpha->allLetters()) {
    // phi permutes the letters: Fix phi is generated by the cliques that
    // are fixed setwise.
    prov.push_back("case I: letter permutation, fixed cliques generate");
    std::vector<Trace> out;
    for (LetterSet b : alpha->cliques()) {
      LetterSet image = 0;
      for (LetterId a : setToLetters(b))
        image |= letterBit(phi.image(a).letters().front());
      if (image == b) out.push_back(Trace::ofClique(alpha, b));
    }
    sortGenerators(out);
    return out;
  }
  prov.push_back("case II: recurse on A0 = " + letterSetNames(*alpha, a0));
  std::vector<Trace> out;
  for (const Trace& g : fixGeneratorsRec(phi.restrict(a0), prov))
    out.push_back(g.embed(alpha));
  sortGenerators(out);
  return out;
}

std::vector<Trace> perGeneratorsRec(const Endomorphism& phi, std::uint64_t m,
                                    std::vector<std::string>& prov) {
  const AlphabetPtr& alpha = phi.alphabet();
  if (alpha->size() == 0) {
    prov.push_back("empty alphabet: Per = {1}");
    return {};
  }
  if (!phi.mapsSomeLetterToIdentity()) {
    const LetterSet a0 = periodicLetters(phi);
    if (a0 == alpha->allLetters()) {
      prov.push_back("case I: letter permutation, Per = M");
      std::vector<Trace> out;
      for (LetterId a = 0; a < alpha->size(); ++a)
        out.push_back(Trace::singleLetter(alpha, a));
      return out;
    }
    prov.push_back("case I: recurse on A0 = " + letterSetNames(*alpha, a0));
    std::vector<Trace> out;
    for (const Trace& g : perGeneratorsRec(phi.restrict(a0), m, prov))
      out.push_back(g.embed(alpha));
    sortGenerators(out);
    return out;
  }
  const CaseIii c = caseIiiData(phi);
  prov.push_back("case II: A1 = " + letterSetNames(*alpha, c.a1) +
                 ", recurse on A2 = " + letterSetNames(*alpha, c.a2));
  std::vector<Trace> out;
  for (const Trace& g : perGeneratorsRec(c.phi2, m, prov)) {
    Trace lifted = phi.iterateApply(g.embed(alpha), m);
    if (!lifted.isIdentity()) out.push_back(std::move(lifted));
  }
  sortGenerators(out);
  return out;
}

}  // namespace

GeneratorSet fixGenerators(const Endomorphism& phi) {
  GeneratorSet out;
  out.generators = fixGeneratorsRec(phi, out.provenance);
  return out;
}

GeneratorSet perGenerators(const Endomorphism& phi, bool useLcm) {
  GeneratorSet out;
  const int n = phi.alphabet()->size();
  out.exponent = useLcm ? lcmUpTo(n) : factorial(n);
  out.generators = perGeneratorsRec(phi, out.exponent, out.provenance);
  return out;
}

std::vector<Trace> enumerateTraces(const AlphabetPtr& alpha, int maxlen) {
  std::set<Trace> all{Trace::identity(alpha)};
  std::vector<Trace> level{Trace::identity(alpha)};
  for (int len = 1; len <= maxlen; ++len) {
    std::set<Trace> next;
    for (const Trace& t : level)
      for (LetterId a = 0; a < alpha->size(); ++a)
        next.insert(t * Trace::singleLetter(alpha, a));
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

std::set<Trace> fixOracle(const Endomorphism& phi, int maxlen) {
  std::set<Trace> out;
  for (const Trace& u : enumerateTraces(phi.alphabet(), maxlen))
    if (phi.apply(u) == u) out.insert(u);
  return out;
}

std::set<Trace> perOracle(const Endomorphism& phi, int maxlen, int maxexp) {
  std::set<Trace> out;
  for (const Trace& u : enumerateTraces(phi.alphabet(), maxlen)) {
    Trace v = u;
    for (int n = 1; n <= maxexp; ++n) {
      v = phi.apply(v);
      if (v == u) { out.insert(u); break; }
    }
  }
  return out;
}

std::set<Trace> submonoidBall(const AlphabetPtr& alpha,
                              const std::vector<Trace>& gens, int maxlen) {
  for (const Trace& g : gens)
    if (g.isIdentity()) throw TrivialGenerator();
  std::set<Trace> out;
  if (maxlen < 0) return out;
  out.insert(Trace::identity(alpha));
  std::vector<Trace> frontier{Trace::identity(alpha)};
  while (!frontier.empty()) {
    std::vector<Trace> next;
    for (const Trace& t : frontier)
      for (const Trace& g : gens) {
        Trace p = t * g;
        if (p.length() <= maxlen && out.insert(p).second)
          next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Trace> reduceGenerators(const std::vector<Trace>& gens,
                                    int lenBound) {
  std::vector<Trace> kept = gens;
  // Longest first, so short generators survive to express long ones.
  std::sort(kept.begin(), kept.end(),
            [](const Trace& x, const Trace& y) { return y < x; });
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Trace> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    const int bound = std::min(lenBound, kept[i].length());
    if (!others.empty() &&
        submonoidBall(kept[i].alphabet(), others, bound).count(kept[i]))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace traces
