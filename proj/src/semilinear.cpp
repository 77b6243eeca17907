#include "traces/semilinear.hpp"

#include <algorithm>
#include <cstddef>

#include "traces/errors.hpp"

namespace traces {

namespace {

bool dominates(const NatVec& x, const NatVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

NatVec matVec(const std::vector<NatVec>& rows, const NatVec& y) {
  NatVec out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i] += rows[i][j] * y[j];
  return out;
}

long long dot(const NatVec& a, const NatVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Contejean-Devie completion for A y = 0 over the naturals. Columns with
// index >= capFrom are never incremented past 1 (used for the
// inhomogeneous marker variable). Returns all minimal nonzero solutions.
std::vector<NatVec> minimalSolutions(const std::vector<NatVec>& rows, int n,
                                     int capFrom) {
  std::vector<NatVec> columns(n);
  for (int j = 0; j < n; ++j) {
    columns[j].resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) columns[j][i] = rows[i][j];
  }
  std::vector<NatVec> minimal;
  std::set<NatVec> frontier;
  for (int j = 0; j < n; ++j) {
    NatVec e(n, 0);
    e[j] = 1;
    frontier.insert(std::move(e));
  }
  while (!frontier.empty()) {
    std::set<NatVec> next;
    for (const NatVec& y : frontier) {
      const NatVec v = matVec(rows, y);
      if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) {
        minimal.push_back(y);
        continue;
      }
      for (int j = 0; j < n; ++j) {
        if (dot(v, columns[j]) >= 0) continue;
        if (j >= capFrom && y[j] >= 1) continue;
        NatVec y2 = y;
        ++y2[j];
        bool pruned = false;
        for (const NatVec& m : minimal)
          if (dominates(y2, m)) { pruned = true; break; }
        if (!pruned) next.insert(std::move(y2));
      }
    }
    frontier = std::move(next);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<NatVec> homogeneousRows(const NatMatrix& m) {
  const int k = static_cast<int>(m.size());
  std::vector<NatVec> rows(k, NatVec(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t < k; ++t) rows[i][t] = m[i][t];
    rows[i][i] -= 1;  // x_i = sum_t M_it x_t  <=>  (M - I) x = 0
  }
  return rows;
}

}  // namespace

SemilinearSet::SemilinearSet(int dimension,
                             std::vector<LinearComponent> components)
    : dim_(dimension), comps_(std::move(components)) {
  for (auto& comp : comps_) {
    if (static_cast<int>(comp.offset.size()) != dim_)
      throw Error("semilinear component dimension mismatch");
    std::sort(comp.periods.begin(), comp.periods.end());
    comp.periods.erase(std::unique(comp.periods.begin(), comp.periods.end()),
                       comp.periods.end());
    std::erase_if(comp.periods, [](const NatVec& p) {
      return std::all_of(p.begin(), p.end(),
                         [](long long x) { return x == 0; });
    });
    for (const auto& p : comp.periods)
      if (static_cast<int>(p.size()) != dim_)
        throw Error("semilinear period dimension mismatch");
  }
  std::sort(comps_.begin(), comps_.end(),
            [](const LinearComponent& x, const LinearComponent& y) {
              return std::tie(x.offset, x.periods) <
                     std::tie(y.offset, y.periods);
            });
}

bool SemilinearSet::finite() const {
  for (const auto& comp : comps_)
    if (!comp.periods.empty()) return false;
  return true;
}

namespace {

bool inSpan(NatVec target, const std::vector<NatVec>& periods,
            std::set<NatVec>& failed) {
  if (std::all_of(target.begin(), target.end(),
                  [](long long x) { return x == 0; }))
    return true;
  if (failed.count(target)) return false;
  for (const NatVec& p : periods) {
    bool ok = true;
    NatVec rest = target;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      rest[i] -= p[i];
      if (rest[i] < 0) ok = false;
    }
    if (ok && inSpan(rest, periods, failed)) return true;
  }
  failed.insert(std::move(target));
  return false;
}

}  // namespace

bool SemilinearSet::contains(const NatVec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw Error("semilinear membership dimension mismatch");
  for (const auto& comp : comps_) {
    NatVec d(dim_);
    bool ok = true;
    for (int i = 0; i < dim_; ++i) {
      d[i] = x[i] - comp.offset[i];
      if (d[i] < 0) ok = false;
    }
    if (!ok) continue;
    std::set<NatVec> failed;
    if (inSpan(d, comp.periods, failed)) return true;
  }
  return false;
}

std::set<NatVec> SemilinearSet::enumerate(long long bound) const {
  std::set<NatVec> out;
  for (const auto& comp : comps_) {
    if (std::any_of(comp.offset.begin(), comp.offset.end(),
                    [&](long long x) { return x > bound; }))
      continue;
    std::set<NatVec> seen{comp.offset};
    std::vector<NatVec> frontier{comp.offset};
    while (!frontier.empty()) {
      std::vector<NatVec> next;
      for (const NatVec& v : frontier)
        for (const NatVec& p : comp.periods) {
          NatVec w = v;
          bool ok = true;
          for (int i = 0; i < dim_; ++i) {
            w[i] += p[i];
            if (w[i] > bound) ok = false;
          }
          if (ok && seen.insert(w).second) next.push_back(std::move(w));
        }
      frontier = std::move(next);
    }
    out.insert(seen.begin(), seen.end());
  }
  return out;
}

namespace {

std::string vecStr(const NatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

std::string SemilinearSet::str() const {
  if (comps_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += " | ";
    out += "base " + vecStr(comps_[i].offset);
    if (!comps_[i].periods.empty()) {
      out += " + periods {";
      for (std::size_t j = 0; j < comps_[i].periods.size(); ++j) {
        if (j) out += ",";
        out += vecStr(comps_[i].periods[j]);
      }
      out += "}";
    }
  }
  return out;
}

std::vector<NatVec> hilbertBasis(const NatMatrix& m) {
  const int k = static_cast<int>(m.size());
  return minimalSolutions(homogeneousRows(m), k, k);
}

SemilinearSet solveAffineNat(const NatMatrix& m, const NatVec& c) {
  const int k = static_cast<int>(m.size());
  if (static_cast<int>(c.size()) != k)
    throw Error("affine system dimension mismatch");
  // Extended homogeneous system (M - I) x + c z = 0 with z capped at 1:
  // minimal solutions with z = 1 are the offsets, z = 0 the periods.
  std::vector<NatVec> rows = homogeneousRows(m);
  for (int i = 0; i < k; ++i) rows[i].push_back(c[i]);
  const std::vector<NatVec> mins = minimalSolutions(rows, k + 1, k);
  std::vector<NatVec> periods;
  std::vector<NatVec> offsets;
  for (const NatVec& y : mins) {
    NatVec x(y.begin(), y.begin() + k);
    if (y[k] == 0)
      periods.push_back(std::move(x));
    else
      offsets.push_back(std::move(x));
  }
  std::vector<LinearComponent> comps;
  for (NatVec& off : offsets)
    comps.push_back(LinearComponent{std::move(off), periods});
  return SemilinearSet(k, std::move(comps));
}

}  // namespace traces
