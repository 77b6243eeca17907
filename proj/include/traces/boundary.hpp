#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "traces/endomorphism.hpp"

namespace traces {

/// A real trace: a finite trace or a boundary point of the completion under
/// the FNF metric. Boundary points are kept in the forms the constructions
/// produce (eventually periodic streams, phi-iterate limits, images of such
/// under a continuous extension), each queryable to any finite FNF depth.
/// Computed prefixes are memoized behind a shared, synchronized cell.
class InfiniteTrace {
 public:
  enum class Kind { Finite, EventuallyPeriodic, IterLimit, Mapped };

  static InfiniteTrace finite(Trace value);
  /// left * period * period * ...; requires period != 1.
  static InfiniteTrace eventuallyPeriodic(Trace left, Trace period);
  /// left * lim base phi^n; requires phi uniformly continuous and
  /// base a proper prefix of base phi.
  static InfiniteTrace iterLimit(Endomorphism phi, Trace base);

  Kind kind() const;
  bool isFinite() const { return kind() == Kind::Finite; }
  const AlphabetPtr& alphabet() const;

  /// First min(n, total) cliques of the FNF stream; fewer than n cliques
  /// means the point is finite. Throws BudgetExceeded if stabilization is
  /// not observed within the extension budget.
  std::vector<LetterSet> fnfPrefix(int n) const;
  Trace prefixTrace(int n) const;

  const Trace& left() const;
  const Trace& period() const;       // EventuallyPeriodic only
  const Endomorphism& endo() const;  // IterLimit / Mapped only
  const Trace& base() const;         // IterLimit only

  std::string str() const;

  friend InfiniteTrace mixedProduct(const Trace& u, const InfiniteTrace& x);
  friend InfiniteTrace applyExtension(const Endomorphism& phi,
                                      const InfiniteTrace& x);

 private:
  struct Data;
  explicit InfiniteTrace(std::shared_ptr<Data> data)
      : data_(std::move(data)) {}
  std::shared_ptr<Data> data_;
};

/// u^omega, the limit of the powers u^n; the identity stays finite.
InfiniteTrace omegaPower(const Trace& u);

/// The boundary action u . X (well defined by left contraction).
InfiniteTrace mixedProduct(const Trace& u, const InfiniteTrace& x);

/// X Phi for the unique continuous extension Phi of a uniformly continuous
/// endomorphism. Throws NotUniformlyContinuous.
InfiniteTrace applyExtension(const Endomorphism& phi, const InfiniteTrace& x);

/// fnfPrefix(x, n) == fnfPrefix(y, n), including agreement on finite ends.
bool equalToDepth(const InfiniteTrace& x, const InfiniteTrace& y, int n);

/// The Y with x = w . Y, when the finite trace w is a prefix of x.
std::optional<InfiniteTrace> leftQuotient(const InfiniteTrace& x,
                                          const Trace& w);

/// Classification of a clique B under iteration of phi, following the
/// stabilizing-singleton / unbounded-alternation dichotomy of the component
/// graph.
struct CliqueClassification {
  enum class Kind { Fixed, NotExtending, Stabilizes, Limit };
  Kind kind;
  LetterSet clique = 0;
  std::optional<Trace> growth;  // z with w_B phi = w_B z; absent for Fixed/NotExtending
  int component = -1;           // j, for Stabilizes
  int steps = 0;                // k with z phi^k inside component j
  std::optional<InfiniteTrace> limit;  // lim w_B phi^n, for Limit
};

/// Requires a clique-union alphabet, uniformly continuous phi, and that no
/// letter maps to the identity.
CliqueClassification iterateLimit(const Endomorphism& phi, LetterSet clique);

}  // namespace traces
