#pragma once

#include <set>
#include <string>
#include <vector>

namespace traces {

using NatVec = std::vector<long long>;
using NatMatrix = std::vector<NatVec>;  // row-major, entries >= 0

/// One linear component: offset + N-combinations of the period vectors.
struct LinearComponent {
  NatVec offset;
  std::vector<NatVec> periods;  // pairwise distinct, nonzero
};

/// A finite union of linear components, all of one dimension.
class SemilinearSet {
 public:
  SemilinearSet() = default;
  SemilinearSet(int dimension, std::vector<LinearComponent> components);

  int dimension() const { return dim_; }
  const std::vector<LinearComponent>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }
  /// True iff the denoted set is finite (no component has periods).
  bool finite() const;

  bool contains(const NatVec& x) const;
  /// All members with every coordinate <= bound.
  std::set<NatVec> enumerate(long long bound) const;

  /// "base (v) + periods {(p1),(p2)}", components joined by " | ";
  /// the empty set prints as "empty".
  std::string str() const;

 private:
  int dim_ = 0;
  std::vector<LinearComponent> comps_;
};

/// Minimal nonzero natural solutions of the homogeneous system x = M x,
/// by the Contejean-Devie completion procedure.
std::vector<NatVec> hilbertBasis(const NatMatrix& m);

/// The full natural solution set of x = c + M x: minimal inhomogeneous
/// solutions as offsets, hilbertBasis(M) as shared periods.
SemilinearSet solveAffineNat(const NatMatrix& m, const NatVec& c);

}  // namespace traces
