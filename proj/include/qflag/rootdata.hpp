#pragma once

#include <string>
#include <vector>

#include "qflag/numeric.hpp"

namespace qflag {

/// Simple type label: series letter A-G plus rank.
///
/// Node numbering is Bourbaki throughout (see README for the table), and all
/// node/generator indices in public interfaces are 1-based.
struct CartanType {
  char series = 'A';
  int rank = 0;

  /// Throws std::invalid_argument unless the rank is admissible for the
  /// series (A >= 1, B/C >= 2, D >= 4, E in 6..8, F = 4, G = 2).
  void validate() const;

  std::string name() const;  // "B3"
  bool operator==(const CartanType&) const = default;
};

/// Element of the root lattice: integer coordinates over the simple roots.
struct RootVec {
  std::vector<int> coords;

  bool operator==(const RootVec&) const = default;
  bool operator<(const RootVec& o) const { return coords < o.coords; }
};

/// Integral weight: integer coordinates over the fundamental weights.
/// Kept distinct from RootVec on purpose; conversions are explicit.
struct WeightVec {
  std::vector<int> coords;

  bool operator==(const WeightVec&) const = default;
  bool operator<(const WeightVec& o) const { return coords < o.coords; }
};

WeightVec operator+(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a, const WeightVec& b);
std::string to_string(const WeightVec& w);
std::string to_string(const RootVec& v);

/// Finite root system of one simple type: Cartan matrix a_ij = (coroot_i,
/// root_j), symmetrizers d_i = (root_i, root_i)/2, the positive roots in
/// reflection-closure order (height, then lexicographic), and the highest
/// root. Immutable after construction; safe to share across threads.
class RootSystem {
 public:
  explicit RootSystem(CartanType t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// Cartan matrix, 0-based storage: cartan()[i][j] = a_{i+1,j+1}.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Symmetrizers, 0-based storage; min entry is 1.
  const std::vector<int>& symmetrizers() const { return d_; }

  const std::vector<RootVec>& positive_roots() const { return positive_roots_; }
  const RootVec& highest_root() const { return highest_root_; }

  /// det(A) > 0 and adj(A) = det(A) * A^{-1}, exact integers.
  const Int& det_cartan() const { return det_; }
  const std::vector<std::vector<Int>>& adjugate_cartan() const { return adjugate_; }
  /// A^{-1} as exact rationals, 0-based.
  const std::vector<std::vector<Rat>>& cartan_inverse() const { return inverse_; }

  /// Fundamental weight for a 1-based node.
  WeightVec fundamental_weight(int node) const;
  WeightVec zero_weight() const;
  WeightVec rho() const;  // sum of all fundamental weights

  /// Coordinates of a root-lattice vector over the fundamental weights (A*c).
  WeightVec to_weight_coords(const RootVec& v) const;
  /// Coordinates of a weight over the simple roots (A^{-1}*m, rational).
  std::vector<Rat> to_root_coords(const WeightVec& w) const;
  /// Simple root for a 1-based node, in fundamental-weight coordinates.
  WeightVec simple_root_as_weight(int node) const;

  int height(const RootVec& v) const;

  /// The invariant symmetric form, normalised so the shortest simple root
  /// has squared length 2. Exact; integer-valued unless both arguments are
  /// weights.
  Rat bilinear(const RootVec& x, const RootVec& y) const;
  Rat bilinear(const WeightVec& x, const RootVec& y) const;
  Rat bilinear(const RootVec& x, const WeightVec& y) const;
  Rat bilinear(const WeightVec& x, const WeightVec& y) const;

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<RootVec> positive_roots_;
  RootVec highest_root_;
  Int det_;
  std::vector<std::vector<Int>> adjugate_;
  std::vector<std::vector<Rat>> inverse_;

  void build_cartan();
  void build_positive_roots();
  void build_inverse();
};

/// Spec-level alias for the constructor.
inline RootSystem build_root_system(CartanType t) { return RootSystem(t); }

}  // namespace qflag
