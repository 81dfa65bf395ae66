#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qflag/laurent.hpp"
#include "qflag/rootdata.hpp"
#include "qflag/weights.hpp"

namespace qflag {

/// Sparse matrix over Z[q, q^-1], stored column-major as sorted
/// (row, value) lists. E/F of minuscule modules have at most one entry per
/// column, and tensor products stay sparse.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(int rows, int cols);

  static SparseMat identity(int n);
  static SparseMat diagonal(std::vector<Laurent> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int row, int col, Laurent v);
  void add_to(int row, int col, const Laurent& v);
  /// nullptr when the entry is structurally zero.
  const Laurent* at(int row, int col) const;
  const std::vector<std::pair<int, Laurent>>& column(int col) const {
    return cols_data_[col];
  }

  bool is_zero() const;
  std::size_t nnz() const;
  /// First structurally nonzero entry in column-major order.
  std::optional<std::pair<int, int>> first_nonzero() const;

  bool operator==(const SparseMat& o) const;
  bool operator!=(const SparseMat& o) const { return !(*this == o); }

  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator+(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat scaled(const Laurent& c) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<int, Laurent>>> cols_data_;
};

/// Matrix realization of the quantized enveloping algebra on a weight basis.
/// Generator-indexed vectors are 0-based storage for 1-based nodes
/// (E[0] is the action of E_1). Weights of basis vectors are in
/// fundamental-weight coordinates; K_i is diagonal with entries
/// q^{(wt, alpha_i)}.
struct MatrixRep {
  RootSystem rs;
  int dim = 0;
  std::vector<WeightVec> basis_weights;
  std::vector<SparseMat> E, F, K, Kinv;

  explicit MatrixRep(RootSystem system) : rs(std::move(system)) {}
};

/// Matrix module on the Weyl orbit of a minuscule fundamental weight:
/// F_i v_w = v_{w - alpha_i} and E_i v_w = v_{w + alpha_i} when the target is
/// a weight, else zero; basis ordered by weight height descending, ties
/// lexicographic. Throws std::invalid_argument with a named witness when the
/// node is not minuscule (a multiplicity above one, or a weight outside the
/// orbit of the highest weight).
MatrixRep minuscule_rep(const RootSystem& rs, int node);

/// One-dimensional module with all weights zero.
MatrixRep trivial_rep(const RootSystem& rs);

/// Tensor product module via the coproduct:
///   E_i -> E_i (x) K_i + 1 (x) E_i,
///   F_i -> F_i (x) 1 + Kinv_i (x) F_i,
///   K_i -> K_i (x) K_i.
/// Basis is the ordered pair basis, index a*dim(second) + b.
MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b);

struct RelationWitness {
  int i = 0, j = 0;      // 1-based generator indices
  int row = 0, col = 0;  // 0-based matrix entry
  std::string residual;  // offending entry, canonical form
};

struct FamilyResult {
  std::string family;
  bool pass = true;
  std::optional<RelationWitness> witness;
};

/// Per-family outcome of the defining-relation check, fixed family order:
/// kk-commute, k-inverse, ke, kf, ef-commutator, serre-e, serre-f.
struct RelationReport {
  std::vector<FamilyResult> families;

  bool all_pass() const;
  const FamilyResult& family(const std::string& name) const;
};

/// Verifies every defining relation as an exact identity of Laurent-matrix
/// entries: K-commutation and invertibility, K E / K F conjugation, the
/// E F commutator against diagonal balanced q-integers of the coroot
/// pairings, and both quantum Serre families with balanced q-binomial
/// coefficients. Records the first failing entry per family.
RelationReport verify_relations(const MatrixRep& rep);

}  // namespace qflag
