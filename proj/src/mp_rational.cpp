#include "traces/mp_rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "traces/errors.hpp"
#include "traces/fixpoints.hpp"

namespace traces {

namespace {

void tidyGens(std::vector<Trace>& gens) {
  std::erase_if(gens, [](const Trace& t) { return t.isIdentity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

}  // namespace

Factor Factor::atoms(std::vector<Trace> ts) {
  Factor f{Kind::Atoms, std::move(ts), {}};
  std::sort(f.traces.begin(), f.traces.end());
  f.traces.erase(std::unique(f.traces.begin(), f.traces.end()),
                 f.traces.end());
  return f;
}

Factor Factor::star(std::vector<Trace> gens) {
  Factor f{Kind::Star, std::move(gens), {}};
  tidyGens(f.traces);
  return f;
}

Factor Factor::closureStar(std::vector<Trace> gens) {
  Factor f{Kind::ClosureStar, std::move(gens), {}};
  tidyGens(f.traces);
  return f;
}

Factor Factor::monomial(SemilinearMonomial m) {
  return Factor{Kind::Monomial, {}, std::move(m)};
}

MpRationalExpr::MpRationalExpr(AlphabetPtr alpha, std::vector<Term> terms)
    : alpha_(std::move(alpha)), terms_(std::move(terms)) {
  for (const Term& term : terms_)
    for (std::size_t i = 0; i < term.factors.size(); ++i) {
      const Factor& f = term.factors[i];
      if (f.kind == Factor::Kind::ClosureStar &&
          (term.factors.size() != 1 || term.tail))
        throw Error("closure-of-star must stand alone in a term");
      if (f.kind == Factor::Kind::Monomial && i + 1 != term.factors.size())
        throw Error("a semilinear monomial must be the last factor");
    }
}

namespace {

// All monoid prefixes of a finite trace.
std::vector<Trace> allPrefixes(const Trace& g) {
  std::set<Trace> seen{Trace::identity(g.alphabet())};
  std::vector<Trace> frontier{Trace::identity(g.alphabet())};
  while (!frontier.empty()) {
    std::vector<Trace> next;
    for (const Trace& u : frontier) {
      const Trace rest = u.prefixQuotient(g);
      if (rest.isIdentity()) continue;
      for (LetterId a : setToLetters(rest.fnf().front())) {
        Trace v = u * Trace::singleLetter(g.alphabet(), a);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Is the probe trace a prefix of some product of the generators? Splits off
// a common prefix against one generator at a time; the remainders must be
// independent (Levi), and the uncovered part recurses.
bool closureCovered(const Trace& probe, const std::vector<Trace>& gens) {
  std::vector<std::vector<Trace>> prefixes;
  for (const Trace& g : gens) prefixes.push_back(allPrefixes(g));
  std::set<std::vector<LetterSet>> failed;
  std::function<bool(const Trace&)> cover = [&](const Trace& s) -> bool {
    if (s.isIdentity()) return true;
    if (failed.count(s.fnf())) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (const Trace& u1 : prefixes[i]) {
        if (u1.isIdentity() || !u1.isPrefixOf(s)) continue;
        const Trace sRest = u1.prefixQuotient(s);
        const Trace gRest = u1.prefixQuotient(gens[i]);
        if (gRest.independentWith(sRest) && cover(sRest)) return true;
      }
    failed.insert(s.fnf());
    return false;
  };
  return cover(probe);
}

std::vector<LetterSet> stateKey(const InfiniteTrace& x) {
  std::vector<LetterSet> key = x.left().fnf();
  key.push_back(~LetterSet{0});
  if (x.kind() == InfiniteTrace::Kind::EventuallyPeriodic) {
    const auto& pf = x.period().fnf();
    key.insert(key.end(), pf.begin(), pf.end());
  }
  return key;
}

// Does the remainder equal monomial * tail? Valid because all letters
// involved live in one complete component, where a point is determined by
// its letter counts.
bool monomialTailMatch(const SemilinearMonomial& mono,
                       const std::optional<InfiniteTrace>& tail,
                       const InfiniteTrace& rest) {
  LetterSet varsMask = 0;
  for (LetterId v : mono.vars) varsMask |= letterBit(v);
  if (!tail) {
    if (rest.kind() != InfiniteTrace::Kind::Finite) return false;
    const Trace& value = rest.left();
    if (value.content() & ~varsMask) return false;
    NatVec x;
    for (LetterId v : mono.vars) x.push_back(value.count(v));
    return mono.set.contains(x);
  }
  const LetterSet omega = tail->period().content();
  if (rest.kind() != InfiniteTrace::Kind::EventuallyPeriodic) return false;
  if (rest.period().content() != omega) return false;
  if (rest.left().content() & ~(varsMask | omega)) return false;
  NatVec x;
  for (LetterId v : mono.vars) x.push_back(rest.left().count(v));
  return mono.set.contains(x);
}

struct TermProbe {
  const Term& term;
  int depth;
  int cap;
  std::map<std::pair<std::size_t, std::vector<LetterSet>>, int> tried;

  bool matchEnd(const InfiniteTrace& rest) const {
    if (!term.tail)
      return rest.kind() == InfiniteTrace::Kind::Finite &&
             rest.left().isIdentity();
    return equalToDepth(rest, *term.tail, depth);
  }

  bool dfs(std::size_t idx, const InfiniteTrace& rest, int used) {
    if (used > cap) return false;
    if (idx == term.factors.size()) return matchEnd(rest);
    const Factor& f = term.factors[idx];
    switch (f.kind) {
      case Factor::Kind::Atoms:
        for (const Trace& t : f.traces)
          if (auto q = leftQuotient(rest, t))
            if (dfs(idx + 1, *q, used + t.length())) return true;
        return false;
      case Factor::Kind::Star: {
        const auto key = std::make_pair(idx, stateKey(rest));
        if (auto it = tried.find(key); it != tried.end() && it->second <= used)
          return false;
        tried[key] = used;
        if (dfs(idx + 1, rest, used)) return true;
        for (const Trace& g : f.traces)
          if (auto q = leftQuotient(rest, g))
            if (dfs(idx, *q, used + g.length())) return true;
        return false;
      }
      case Factor::Kind::ClosureStar:
        return closureCovered(rest.prefixTrace(depth), f.traces);
      case Factor::Kind::Monomial:
        return monomialTailMatch(f.mono, term.tail, rest);
    }
    return false;
  }
};

}  // namespace

bool MpRationalExpr::accepts(const InfiniteTrace& candidate, int depth,
                             int lenCap) const {
  if (lenCap < 0) {
    int unit = std::max(1, alpha_->size());
    for (const Term& term : terms_)
      for (const Factor& f : term.factors)
        for (const Trace& t : f.traces) unit = std::max(unit, t.length());
    lenCap = (depth + 2) * unit;
  }
  for (const Term& term : terms_) {
    TermProbe probe{term, depth, lenCap, {}};
    if (probe.dfs(0, candidate, 0)) return true;
  }
  return false;
}

bool MpRationalExpr::denotesFiniteSet() const {
  for (const Term& term : terms_)
    for (const Factor& f : term.factors) {
      if ((f.kind == Factor::Kind::Star ||
           f.kind == Factor::Kind::ClosureStar) &&
          !f.traces.empty())
        return false;
      if (f.kind == Factor::Kind::Monomial && !f.mono.set.finite())
        return false;
    }
  return true;
}

std::vector<InfiniteTrace> MpRationalExpr::sampleMembers(
    int starUnroll, long long monoBound, std::size_t maxPerTerm) const {
  std::vector<InfiniteTrace> out;
  for (const Term& term : terms_) {
    std::vector<Trace> partials{Trace::identity(alpha_)};
    for (const Factor& f : term.factors) {
      std::vector<Trace> expansions;
      switch (f.kind) {
        case Factor::Kind::Atoms:
          expansions = f.traces;
          break;
        case Factor::Kind::Star:
        case Factor::Kind::ClosureStar: {
          std::set<Trace> ball{Trace::identity(alpha_)};
          std::vector<Trace> frontier{Trace::identity(alpha_)};
          for (int round = 0; round < starUnroll; ++round) {
            std::vector<Trace> next;
            for (const Trace& t : frontier)
              for (const Trace& g : f.traces) {
                Trace p = t * g;
                if (ball.insert(p).second) next.push_back(std::move(p));
              }
            frontier = std::move(next);
          }
          expansions.assign(ball.begin(), ball.end());
          break;
        }
        case Factor::Kind::Monomial:
          for (const NatVec& x : f.mono.set.enumerate(monoBound)) {
            std::vector<LetterId> word;
            for (std::size_t i = 0; i < f.mono.vars.size(); ++i)
              for (long long c = 0; c < x[i]; ++c)
                word.push_back(f.mono.vars[i]);
            expansions.push_back(
                Trace::fromWord(alpha_, std::span<const LetterId>(word)));
          }
          break;
      }
      std::set<Trace> combined;
      for (const Trace& p : partials)
        for (const Trace& e : expansions) {
          combined.insert(p * e);
          if (combined.size() >= maxPerTerm) break;
        }
      partials.assign(combined.begin(), combined.end());
    }
    for (const Trace& p : partials) {
      if (term.tail)
        out.push_back(mixedProduct(p, *term.tail));
      else
        out.push_back(InfiniteTrace::finite(p));
      if (out.size() > maxPerTerm * terms_.size()) break;
    }
  }
  return out;
}

namespace {

std::string gensStr(const std::vector<Trace>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += gens[i].str();
  }
  return out;
}

std::string factorStr(const Alphabet& alpha, const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::Atoms:
      if (f.traces.size() == 1) return f.traces.front().str();
      return "{" + gensStr(f.traces) + "}";
    case Factor::Kind::Star:
      return "⟨" + gensStr(f.traces) + "⟩";
    case Factor::Kind::ClosureStar:
      return "cl⟨" + gensStr(f.traces) + "⟩";
    case Factor::Kind::Monomial: {
      std::string vars;
      for (std::size_t i = 0; i < f.mono.vars.size(); ++i) {
        if (i) vars += " ";
        vars += alpha.name(f.mono.vars[i]);
      }
      return "sl[" + vars + "]{" + f.mono.set.str() + "}";
    }
  }
  return {};
}

}  // namespace

std::string MpRationalExpr::str() const {
  if (terms_.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " ∪ ";
    const Term& term = terms_[i];
    std::string t;
    for (std::size_t j = 0; j < term.factors.size(); ++j) {
      if (j) t += "·";
      t += factorStr(*alpha_, term.factors[j]);
    }
    if (term.tail) {
      if (!t.empty()) t += "·";
      t += term.tail->str();
    }
    if (t.empty()) t = "{}";
    out += t;
  }
  return out;
}

MpRationalExpr MpRationalExpr::embedInto(const AlphabetPtr& target) const {
  std::vector<Term> terms;
  for (const Term& term : terms_) {
    Term t;
    for (const Factor& f : term.factors) {
      Factor g = f;
      for (Trace& tr : g.traces) tr = tr.embed(target);
      for (LetterId& v : g.mono.vars) v = target->require(alpha_->name(v));
      t.factors.push_back(std::move(g));
    }
    if (term.tail) {
      switch (term.tail->kind()) {
        case InfiniteTrace::Kind::Finite:
          t.tail = InfiniteTrace::finite(term.tail->left().embed(target));
          break;
        case InfiniteTrace::Kind::EventuallyPeriodic:
          t.tail = InfiniteTrace::eventuallyPeriodic(
              term.tail->left().embed(target),
              term.tail->period().embed(target));
          break;
        default:
          throw Error("cannot embed a limit tail across alphabets");
      }
    }
    terms.push_back(std::move(t));
  }
  return MpRationalExpr(target, std::move(terms));
}

MpRationalExpr yFixedSet(const Endomorphism& phi, const Trace& u) {
  const AlphabetPtr& alpha = phi.alphabet();
  if (alpha->size() > 0 && !alpha->isClique(alpha->allLetters()))
    throw NotCommutativeComponent();
  if (!sameAlphabet(alpha, u.alphabet())) throw AlphabetMismatch();

  std::vector<Term> terms;
  const LetterSet all = alpha->allLetters();
  for (LetterSet b = 0;; ++b) {
    // Necessary for a nonempty part: the omega content is preserved.
    const Trace wB = b ? Trace::ofClique(alpha, b) : Trace::identity(alpha);
    if (phi.apply(wB).content() == b) {
      const std::vector<LetterId> vars = setToLetters(all & ~b);
      const int k = static_cast<int>(vars.size());
      NatMatrix m(k, NatVec(k, 0));
      NatVec c(k, 0);
      for (int i = 0; i < k; ++i) {
        c[i] = u.count(vars[i]);
        for (int t = 0; t < k; ++t)
          m[i][t] = phi.image(vars[t]).count(vars[i]);
      }
      const SemilinearSet sol = solveAffineNat(m, c);
      if (!sol.empty()) {
        Term term;
        if (!vars.empty())
          term.factors.push_back(
              Factor::monomial(SemilinearMonomial{sol, vars}));
        if (b)
          term.tail = InfiniteTrace::eventuallyPeriodic(
              Trace::identity(alpha), wB);
        else if (term.factors.empty())
          term.factors.push_back(
              Factor::atoms({Trace::identity(alpha)}));
        terms.push_back(std::move(term));
      }
    }
    if (b == all) break;
  }
  return MpRationalExpr(alpha, std::move(terms));
}

MpRationalExpr boundaryFixDescription(const Endomorphism& phi) {
  const AlphabetPtr& alpha = phi.alphabet();
  if (!alpha->isCliqueUnion()) throw NotCliqueUnion();
  if (!phi.isUniformlyContinuous()) throw NotUniformlyContinuous();

  if (phi.isTrivial()) {
    Term only;
    only.factors.push_back(Factor::atoms({Trace::identity(alpha)}));
    return MpRationalExpr(alpha, {std::move(only)});
  }
  const std::vector<LetterSet> comps = alpha->connectedComponents();
  if (comps.size() <= 1)
    return yFixedSet(phi, Trace::identity(alpha));

  // Noncommutative and nontrivial: a uniformly continuous phi erases no
  // letter (an erased letter would force phi trivial across components).
  if (phi.mapsSomeLetterToIdentity())
    throw Error("unexpected erasing letter for a nontrivial uc endomorphism");

  const std::vector<Trace> fixG = fixGenerators(phi).generators;
  std::vector<Term> terms;
  Term closure;
  closure.factors.push_back(Factor::closureStar(fixG));
  terms.push_back(std::move(closure));

  for (const LetterSet comp : comps) {
    // Every nonempty subset of a complete component is a clique.
    for (LetterSet b = comp & (comp - 1);; b = (b - 1) & comp) {
      const LetterSet clique = comp & ~b;
      if (clique) {
        const CliqueClassification cls = iterateLimit(phi, clique);
        if (cls.kind == CliqueClassification::Kind::Stabilizes) {
          const LetterSet compJ = comps[cls.component];
          // prefix = w_B z (z phi) ... (z phi^{k-1}), u_J = z phi^k.
          Trace prefix = Trace::ofClique(alpha, clique);
          Trace zi = *cls.growth;
          for (int i = 0; i < cls.steps; ++i) {
            prefix = prefix * zi;
            zi = phi.apply(zi);
          }
          const Trace uJ = zi;
          const Endomorphism phiJ = phi.restrict(compJ);
          const MpRationalExpr yExpr =
              yFixedSet(phiJ, uJ.project(compJ)).embedInto(alpha);
          for (const Term& yTerm : yExpr.terms()) {
            Term t;
            t.factors.push_back(Factor::star(fixG));
            t.factors.push_back(Factor::atoms({prefix}));
            for (const Factor& f : yTerm.factors) {
              // The identity atom of a finite y-part adds nothing here.
              if (f.kind == Factor::Kind::Atoms && f.traces.size() == 1 &&
                  f.traces.front().isIdentity())
                continue;
              t.factors.push_back(f);
            }
            t.tail = yTerm.tail;
            terms.push_back(std::move(t));
          }
        } else if (cls.kind == CliqueClassification::Kind::Limit) {
          Term t;
          t.factors.push_back(Factor::star(fixG));
          t.tail = cls.limit;
          terms.push_back(std::move(t));
        }
      }
      if (b == 0) break;
    }
  }
  return MpRationalExpr(alpha, std::move(terms));
}

}  // namespace traces
