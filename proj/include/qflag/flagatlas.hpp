#pragma once

#include <string>
#include <vector>

#include "qflag/rootdata.hpp"
#include "qflag/weights.hpp"

namespace qflag {

/// One irreducible quantum flag manifold: a simple type plus the single
/// crossed node s (the parabolic keeps every other node). Valid only when
/// the simple root at s has coefficient 1 in the highest root.
struct FlagDescriptor {
  CartanType type;
  int node = 0;
};

/// Nodes whose coefficient in the highest root equals 1, ascending.
std::vector<int> cominuscule_nodes(const RootSystem& rs);

bool is_cominuscule(const RootSystem& rs, int node);

/// Throws std::invalid_argument unless node indexes a cominuscule simple root.
void validate_flag(const RootSystem& rs, int node);

/// Complex dimension M of the flag manifold: the number of positive roots
/// whose coordinate at the crossed node is at least 1.
int complex_dimension(const RootSystem& rs, int node);

struct JEntry {
  WeightVec weight;
  Int mult;
};

/// Weights w of the crossed-node fundamental module (with multiplicity)
/// satisfying (fw_s, fw_s - alpha_s - w) = 0; the exact test runs over the
/// full weight diagram. Order matches the diagram (height descending).
std::vector<JEntry> j1_set(const RootSystem& rs, int node);

struct ZData {
  /// Exponent vector of the central grouplike element: det(A) * fw_s
  /// expanded over the simple roots, i.e. the s-column of adj(A).
  std::vector<Int> a;
  /// Integer exponents e_j with Z E_j Z^{-1} = q^{e_j} E_j; zero away from
  /// the crossed node and d_s * det(A) at it.
  std::vector<Int> commutation_exponents;
};

ZData z_element(const RootSystem& rs, int node);

/// Common value of (det(A) fw_s, w - fw_s) over the j1 weights w. Uniformity
/// across j1 is asserted (std::logic_error on violation); the magnitude is
/// d_s * det(A) != 0. The sign is a bookkeeping convention; every certificate
/// below consumes nonvanishing only.
long omega01_character_exponent(const RootSystem& rs, int node);

struct FlagInvariants {
  CartanType type;
  int node = 0;
  int M = 0;
  long detA = 0;
  int d_s = 0;
  long N = 0;  // dim of the crossed-node fundamental module
  std::vector<long> a;
  std::vector<JEntry> j1;
  long j1_total = 0;  // multiplicity-weighted size of j1
  long omega01_exponent = 0;
  std::vector<Int> form_dims;  // binom(2M, k), k = 0..2M
};

FlagInvariants flag_invariants(const RootSystem& rs, int node);

enum class CertKind { Uniqueness01, Uniqueness10, Flatness, TorsionFree };

const char* cert_kind_name(CertKind k);

/// Exponent-separation certificate: pass holds exactly when the two central
/// character exponents differ, which makes q^lhs != q^rhs for every real q
/// outside {-1, 0, 1}.
struct CertResult {
  CertKind kind = CertKind::Uniqueness01;
  bool pass = false;
  long lhs_exponent = 0;
  long rhs_exponent = 0;
  std::string explanation;
};

/// module_z_exponent is the integer e with the module's central character
/// value q^e. opposite_structure negates the (0,1)-exponent, certifying the
/// opposite complex structure.
CertResult uniqueness_certificate(const RootSystem& rs, int node,
                                  long module_z_exponent,
                                  bool opposite_structure = false);
CertResult flatness_certificate(const RootSystem& rs, int node,
                                long module_z_exponent);
CertResult torsion_certificate(const RootSystem& rs, int node);

}  // namespace qflag
