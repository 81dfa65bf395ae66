#include "qflag/flagatlas.hpp"

#include <sstream>
#include <stdexcept>

namespace qflag {

std::vector<int> cominuscule_nodes(const RootSystem& rs) {
  std::vector<int> nodes;
  const auto& top = rs.highest_root().coords;
  for (int i = 0; i < rs.rank(); ++i)
    if (top[i] == 1) nodes.push_back(i + 1);
  return nodes;
}

bool is_cominuscule(const RootSystem& rs, int node) {
  return node >= 1 && node <= rs.rank() &&
         rs.highest_root().coords[node - 1] == 1;
}

void validate_flag(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw std::invalid_argument("node " + std::to_string(node) +
                                " out of range for " + rs.type().name());
  if (!is_cominuscule(rs, node))
    throw std::invalid_argument(
        "node " + std::to_string(node) + " of " + rs.type().name() +
        " is not cominuscule: highest-root coefficient is " +
        std::to_string(rs.highest_root().coords[node - 1]));
}

int complex_dimension(const RootSystem& rs, int node) {
  validate_flag(rs, node);
  int count = 0;
  for (const RootVec& beta : rs.positive_roots())
    if (beta.coords[node - 1] >= 1) ++count;
  return count;
}

std::vector<JEntry> j1_set(const RootSystem& rs, int node) {
  validate_flag(rs, node);
  const int r = rs.rank();
  const WeightVec fw = rs.fundamental_weight(node);
  const WeightVec alpha_s = rs.simple_root_as_weight(node);
  // (fw_s, x) = (1/det A) sum_j adj(A)_{j,s} d_j x_j, so the zero test is the
  // integer dot product against the adjugate column.
  std::vector<Int> w(r);
  for (int j = 0; j < r; ++j)
    w[j] = rs.adjugate_cartan()[j][node - 1] * rs.symmetrizers()[j];
  auto diagram = weight_multiplicities(rs, fw);
  std::vector<JEntry> out;
  for (const auto& entry : diagram->entries) {
    const WeightVec arg = fw - alpha_s - entry.weight;
    Int dot(0);
    for (int j = 0; j < r; ++j) dot += w[j] * arg.coords[j];
    if (dot == 0) out.push_back(JEntry{entry.weight, entry.mult});
  }
  return out;
}

ZData z_element(const RootSystem& rs, int node) {
  validate_flag(rs, node);
  const int r = rs.rank();
  const int s = node - 1;
  const auto& adj = rs.adjugate_cartan();
  ZData z;
  z.a.reserve(r);
  for (int k = 0; k < r; ++k) z.a.push_back(adj[k][s]);
  // (det(A) fw_s, alpha_j) = sum_k a_k (alpha_k, alpha_j) = sum_k a_k d_k a_kj
  z.commutation_exponents.assign(r, Int(0));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      z.commutation_exponents[j] +=
          z.a[k] * rs.symmetrizers()[k] * rs.cartan()[k][j];
  return z;
}

long omega01_character_exponent(const RootSystem& rs, int node) {
  validate_flag(rs, node);
  const int r = rs.rank();
  const WeightVec fw = rs.fundamental_weight(node);
  const ZData z = z_element(rs, node);
  const std::vector<JEntry> j1 = j1_set(rs, node);
  if (j1.empty())
    throw std::logic_error("empty j1 set for " + rs.type().name() + " node " +
                           std::to_string(node));
  bool have = false;
  Int common(0);
  for (const JEntry& entry : j1) {
    // (det(A) fw_s, w - fw_s) = sum_k a_k d_k (w - fw_s)_k
    const WeightVec diff = entry.weight - fw;
    Int value(0);
    for (int k = 0; k < r; ++k)
      value += z.a[k] * rs.symmetrizers()[k] * diff.coords[k];
    if (!have) {
      common = value;
      have = true;
    } else if (value != common) {
      throw std::logic_error("central character exponent not uniform over j1 for " +
                             rs.type().name() + " node " + std::to_string(node));
    }
  }
  const long expo = to_long_checked(common);
  const long expected =
      rs.symmetrizers()[node - 1] * to_long_checked(rs.det_cartan());
  if (expo != expected && expo != -expected)
    throw std::logic_error("character exponent magnitude mismatch for " +
                           rs.type().name() + " node " + std::to_string(node));
  return expo;
}

FlagInvariants flag_invariants(const RootSystem& rs, int node) {
  validate_flag(rs, node);
  FlagInvariants inv;
  inv.type = rs.type();
  inv.node = node;
  inv.M = complex_dimension(rs, node);
  inv.detA = to_long_checked(rs.det_cartan());
  inv.d_s = rs.symmetrizers()[node - 1];
  inv.N = to_long_checked(weyl_dim(rs, rs.fundamental_weight(node)));
  const ZData z = z_element(rs, node);
  inv.a.reserve(rs.rank());
  for (const Int& v : z.a) inv.a.push_back(to_long_checked(v));
  inv.j1 = j1_set(rs, node);
  Int total(0);
  for (const JEntry& e : inv.j1) total += e.mult;
  inv.j1_total = to_long_checked(total);
  inv.omega01_exponent = omega01_character_exponent(rs, node);
  inv.form_dims.reserve(2 * inv.M + 1);
  for (int k = 0; k <= 2 * inv.M; ++k)
    inv.form_dims.push_back(binomial(2 * static_cast<unsigned long>(inv.M), k));
  return inv;
}

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::Uniqueness01: return "uniqueness-01";
    case CertKind::Uniqueness10: return "uniqueness-10";
    case CertKind::Flatness: return "flatness";
    case CertKind::TorsionFree: return "torsion-free";
  }
  return "?";
}

namespace {

CertResult make_cert(CertKind kind, long lhs, long rhs, const std::string& what) {
  CertResult c;
  c.kind = kind;
  c.lhs_exponent = lhs;
  c.rhs_exponent = rhs;
  c.pass = lhs != rhs;
  std::ostringstream os;
  os << what << ": central character exponents " << lhs << " vs " << rhs;
  os << (c.pass ? " differ, so q^" : " coincide; q^");
  os << lhs << (c.pass ? " != q^" : " = q^") << rhs;
  if (c.pass) os << " for every real q outside {-1, 0, 1}";
  c.explanation = os.str();
  return c;
}

}  // namespace

CertResult uniqueness_certificate(const RootSystem& rs, int node,
                                  long module_z_exponent, bool opposite_structure) {
  long w = omega01_character_exponent(rs, node);
  if (opposite_structure) w = -w;
  return make_cert(
      opposite_structure ? CertKind::Uniqueness10 : CertKind::Uniqueness01,
      w + module_z_exponent, module_z_exponent,
      "no nonzero covariant map from the module into forms tensor module");
}

CertResult flatness_certificate(const RootSystem& rs, int node,
                                long module_z_exponent) {
  const long w = omega01_character_exponent(rs, node);
  return make_cert(CertKind::Flatness, 2 * w + module_z_exponent,
                   module_z_exponent,
                   "curvature target separated from the module");
}

CertResult torsion_certificate(const RootSystem& rs, int node) {
  const long w = omega01_character_exponent(rs, node);
  return make_cert(CertKind::TorsionFree, 2 * w, w,
                   "torsion target separated from the one-forms");
}

}  // namespace qflag
