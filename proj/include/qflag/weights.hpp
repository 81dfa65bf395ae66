#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "qflag/rootdata.hpp"

namespace qflag {

struct WeightEntry {
  WeightVec weight;
  std::vector<int> root_offset;  // highest - weight, over the simple roots
  int depth = 0;                 // height of root_offset
  Int mult;
};

/// Full weight diagram of an irreducible type-1 module V_mu.
/// Entries are sorted by depth below the highest weight, then
/// lexicographically — i.e. by weight height descending.
struct WeightDiagram {
  WeightVec highest;
  std::vector<WeightEntry> entries;
  std::map<WeightVec, std::size_t> index;

  Int dimension() const;
  /// Multiplicity, or nullptr when not a weight of V_mu.
  const Int* mult(const WeightVec& w) const;
};

bool is_dominant(const WeightVec& w);

WeightVec simple_reflection(const RootSystem& rs, const WeightVec& w, int node);

/// Dominant Weyl-chamber representative. If offset is non-null it must hold
/// the simple-root coordinates of (reference - w) on entry and is updated to
/// those of (reference - representative).
WeightVec dominant_representative(const RootSystem& rs, WeightVec w,
                                  std::vector<int>* offset = nullptr);

/// Orbit of a weight under the simple reflections, deduplicated.
std::set<WeightVec> weyl_orbit(const RootSystem& rs, const WeightVec& w);

/// Exact weight multiplicities of V_mu by the Freudenthal recursion
/// (all-integer form; every division is checked exact). Results are memoized
/// process-wide behind a mutex; the returned diagram is immutable.
/// Throws std::invalid_argument unless mu is dominant.
std::shared_ptr<const WeightDiagram> weight_multiplicities(const RootSystem& rs,
                                                           const WeightVec& mu);

/// dim V_mu by the Weyl dimension formula, exact.
/// Throws std::invalid_argument unless mu is dominant.
Int weyl_dim(const RootSystem& rs, const WeightVec& mu);

}  // namespace qflag
