#include "traces/boundary.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "traces/errors.hpp"

namespace traces {

struct InfiniteTrace::Data {
  Kind kind;
  Trace left;                        // finite value / stream prefix
  std::optional<Trace> period;       // EventuallyPeriodic
  std::optional<Endomorphism> phi;   // IterLimit / Mapped
  std::optional<Trace> base;         // IterLimit
  std::shared_ptr<const Data> inner; // Mapped

  mutable std::mutex mu;
  mutable std::vector<LetterSet> memo;
  mutable bool memoComplete = false;  // stream proved finite

  explicit Data(Kind k, Trace l) : kind(k), left(std::move(l)) {}
};

InfiniteTrace InfiniteTrace::finite(Trace value) {
  auto d = std::make_shared<Data>(Kind::Finite, std::move(value));
  return InfiniteTrace(std::move(d));
}

InfiniteTrace InfiniteTrace::eventuallyPeriodic(Trace left, Trace period) {
  left.requireSameAlphabet(period);
  if (period.isIdentity())
    throw PreconditionViolated("eventually periodic period must be nontrivial");
  auto d = std::make_shared<Data>(Kind::EventuallyPeriodic, std::move(left));
  d->period = std::move(period);
  return InfiniteTrace(std::move(d));
}

InfiniteTrace InfiniteTrace::iterLimit(Endomorphism phi, Trace base) {
  if (!sameAlphabet(phi.alphabet(), base.alphabet())) throw AlphabetMismatch();
  if (!phi.isUniformlyContinuous()) throw NotUniformlyContinuous();
  const Trace img = phi.apply(base);
  if (!base.isPrefixOf(img) || base.prefixQuotient(img).isIdentity())
    throw PreconditionViolated(
        "iterate limit needs base a proper prefix of its image");
  auto d = std::make_shared<Data>(Kind::IterLimit,
                                  Trace::identity(base.alphabet()));
  d->phi = std::move(phi);
  d->base = std::move(base);
  return InfiniteTrace(std::move(d));
}

InfiniteTrace::Kind InfiniteTrace::kind() const { return data_->kind; }

const AlphabetPtr& InfiniteTrace::alphabet() const {
  return data_->left.alphabet();
}

const Trace& InfiniteTrace::left() const { return data_->left; }

const Trace& InfiniteTrace::period() const { return *data_->period; }

const Endomorphism& InfiniteTrace::endo() const { return *data_->phi; }

const Trace& InfiniteTrace::base() const { return *data_->base; }

namespace {

std::vector<LetterSet> firstCliques(const Trace& t, int n) {
  const auto& fnf = t.fnf();
  const int take = std::min<int>(n, static_cast<int>(fnf.size()));
  return {fnf.begin(), fnf.begin() + take};
}

constexpr std::size_t kLengthBudget = 200000;

}  // namespace

std::vector<LetterSet> InfiniteTrace::fnfPrefix(int n) const {
  const Data& d = *data_;
  std::scoped_lock lock(d.mu);
  if (d.memoComplete || static_cast<int>(d.memo.size()) >= n)
    return {d.memo.begin(),
            d.memo.begin() + std::min<std::size_t>(d.memo.size(), n)};

  std::vector<LetterSet> out;
  bool ended = false;
  switch (d.kind) {
    case Kind::Finite:
      out = firstCliques(d.left, n);
      ended = true;
      break;
    case Kind::EventuallyPeriodic: {
      // After n copies of the period every letter has climbed past height n,
      // so the first n cliques of left * period^n are final.
      const Trace approx = d.left * d.period->pow(n);
      out = firstCliques(approx, n);
      break;
    }
    case Kind::IterLimit: {
      // phi is a contraction, so consecutive agreement only grows; once
      // r(p_t, p_{t+1}) >= n the first n cliques are final.
      Trace cur = *d.base;
      while (true) {
        Trace next = d.phi->apply(cur);
        const auto r = cur.agreement(next);
        if (!r) {  // stationary: the limit is finite
          out = firstCliques(d.left * cur, n);
          ended = static_cast<int>((d.left * cur).height()) < n;
          break;
        }
        if (*r >= n) {
          out = firstCliques(d.left * cur, n);
          ended = static_cast<int>(out.size()) < n;
          break;
        }
        if (static_cast<std::size_t>(next.length()) > kLengthBudget)
          throw BudgetExceeded("iterate limit prefix did not stabilize");
        cur = std::move(next);
      }
      break;
    }
    case Kind::Mapped: {
      // r((first n cliques of X) phi, X Phi) >= n; if the image has fewer
      // than n cliques it already equals X Phi.
      const InfiniteTrace innerView(
          std::const_pointer_cast<Data>(d.inner));
      const Trace pref = innerView.prefixTrace(n);
      const bool innerEnded = pref.height() < n;
      const Trace y = d.left * d.phi->apply(pref);
      out = firstCliques(y, n);
      ended = y.height() < n || (innerEnded && y.height() <= n);
      break;
    }
  }
  if (static_cast<int>(out.size()) > static_cast<int>(d.memo.size())) {
    d.memo = out;
    d.memoComplete = ended;
  } else if (ended) {
    d.memoComplete = true;
  }
  return out;
}

Trace InfiniteTrace::prefixTrace(int n) const {
  std::vector<LetterId> word;
  for (LetterSet b : fnfPrefix(n))
    for (LetterId a : setToLetters(b)) word.push_back(a);
  return Trace::fromWord(alphabet(), std::span<const LetterId>(word));
}

std::string InfiniteTrace::str() const {
  const Data& d = *data_;
  switch (d.kind) {
    case Kind::Finite:
      return d.left.str();
    case Kind::EventuallyPeriodic:
      return (d.left.isIdentity() ? std::string() : d.left.str()) + "(" +
             d.period->str() + ")ω";
    case Kind::IterLimit:
      return (d.left.isIdentity() ? std::string() : d.left.str() + "·") +
             "lim " + d.base->str() + "^φ";
    case Kind::Mapped:
      return (d.left.isIdentity() ? std::string() : d.left.str() + "·") +
             "Φ[" +
             InfiniteTrace(std::const_pointer_cast<Data>(d.inner)).str() + "]";
  }
  return {};
}

InfiniteTrace omegaPower(const Trace& u) {
  if (u.isIdentity()) return InfiniteTrace::finite(u);
  return InfiniteTrace::eventuallyPeriodic(Trace::identity(u.alphabet()), u);
}

InfiniteTrace mixedProduct(const Trace& u, const InfiniteTrace& x) {
  if (!sameAlphabet(u.alphabet(), x.alphabet())) throw AlphabetMismatch();
  if (u.isIdentity()) return x;
  auto d = std::make_shared<InfiniteTrace::Data>(x.data_->kind,
                                                 u * x.data_->left);
  d->period = x.data_->period;
  d->phi = x.data_->phi;
  d->base = x.data_->base;
  d->inner = x.data_->inner;
  return InfiniteTrace(std::move(d));
}

InfiniteTrace applyExtension(const Endomorphism& phi, const InfiniteTrace& x) {
  if (!sameAlphabet(phi.alphabet(), x.alphabet())) throw AlphabetMismatch();
  if (!phi.isUniformlyContinuous()) throw NotUniformlyContinuous();
  using Kind = InfiniteTrace::Kind;
  switch (x.kind()) {
    case Kind::Finite:
      return InfiniteTrace::finite(phi.apply(x.left()));
    case Kind::EventuallyPeriodic: {
      const Trace p = phi.apply(x.left());
      const Trace q = phi.apply(x.period());
      if (q.isIdentity()) return InfiniteTrace::finite(p);
      return InfiniteTrace::eventuallyPeriodic(p, q);
    }
    case Kind::IterLimit:
      if (x.endo() == phi) {
        // The limit of phi-iterates is Phi-invariant; only the finite left
        // part moves.
        InfiniteTrace out = InfiniteTrace::iterLimit(phi, x.base());
        return mixedProduct(phi.apply(x.left()), out);
      }
      break;
    case Kind::Mapped:
      break;
  }
  auto d = std::make_shared<InfiniteTrace::Data>(
      Kind::Mapped, Trace::identity(x.alphabet()));
  d->phi = phi;
  d->inner = x.data_;
  return InfiniteTrace(std::move(d));
}

bool equalToDepth(const InfiniteTrace& x, const InfiniteTrace& y, int n) {
  return x.fnfPrefix(n) == y.fnfPrefix(n);
}

std::optional<InfiniteTrace> leftQuotient(const InfiniteTrace& x,
                                          const Trace& w) {
  if (!sameAlphabet(w.alphabet(), x.alphabet())) throw AlphabetMismatch();
  using Kind = InfiniteTrace::Kind;
  switch (x.kind()) {
    case Kind::Finite:
      if (w.isPrefixOf(x.left()))
        return InfiniteTrace::finite(w.prefixQuotient(x.left()));
      return std::nullopt;
    case Kind::EventuallyPeriodic: {
      // If w is a prefix of the stream it is already a prefix of
      // left * period^t for t up to the letter length of w.
      const int tMax = w.length() + 2;
      Trace approx = x.left();
      for (int t = 0; t <= tMax; ++t) {
        if (w.isPrefixOf(approx))
          return InfiniteTrace::eventuallyPeriodic(w.prefixQuotient(approx),
                                                   x.period());
        approx = approx * x.period();
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

CliqueClassification iterateLimit(const Endomorphism& phi, LetterSet clique) {
  const AlphabetPtr& alpha = phi.alphabet();
  if (!alpha->isCliqueUnion()) throw NotCliqueUnion();
  if (phi.mapsSomeLetterToIdentity())
    throw PreconditionViolated("some letter maps to the identity");
  if (!phi.isUniformlyContinuous()) throw NotUniformlyContinuous();

  CliqueClassification out;
  out.clique = clique;
  const Trace w = Trace::ofClique(alpha, clique);
  const Trace img = phi.apply(w);
  if (img == w) {
    out.kind = CliqueClassification::Kind::Fixed;
    return out;
  }
  if (!w.isPrefixOf(img)) {
    out.kind = CliqueClassification::Kind::NotExtending;
    return out;
  }
  const Trace z = w.prefixQuotient(img);
  out.growth = z;

  const std::vector<LetterSet> comps = alpha->connectedComponents();
  const int r = static_cast<int>(comps.size());
  auto compsOf = [&](LetterSet content) {
    LetterSet s = 0;
    for (int j = 0; j < r; ++j)
      if (content & comps[j]) s |= LetterSet{1} << j;
    return s;
  };
  // kappa: component image map; consistent across a component because
  // images of independent letters commute.
  std::vector<LetterSet> kappa(r, 0);
  for (int j = 0; j < r; ++j) {
    bool first = true;
    for (LetterId a : setToLetters(comps[j])) {
      const LetterSet ks = compsOf(phi.image(a).content());
      if (first) {
        kappa[j] = ks;
        first = false;
      } else if (kappa[j] != ks) {
        throw Error("component image map is inconsistent");
      }
    }
  }
  auto step = [&](LetterSet s) {
    LetterSet t = 0;
    for (int j = 0; j < r; ++j)
      if (s & (LetterSet{1} << j)) t |= kappa[j];
    return t;
  };
  LetterSet s = compsOf(z.content());
  const long long maxSteps = 1LL << r;  // in a cycle after 2^r - 1 edges
  for (long long k = 0; k < maxSteps; ++k) {
    if (std::popcount(s) == 1) {
      const int j = std::countr_zero(s);
      if (kappa[j] == s) {
        out.kind = CliqueClassification::Kind::Stabilizes;
        out.component = j;
        out.steps = static_cast<int>(k);
        return out;
      }
    }
    s = step(s);
  }
  out.kind = CliqueClassification::Kind::Limit;
  out.limit = InfiniteTrace::iterLimit(phi, w);
  return out;
}

}  // namespace traces
