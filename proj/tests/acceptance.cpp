// Acceptance suite: one line per criterion, exit 0 only when every criterion
// holds. Checks are exact; each criterion also carries a wall-clock budget
// that is enforced, not advisory.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qflag/flagatlas.hpp"
#include "qflag/laurent.hpp"
#include "qflag/qmodule.hpp"
#include "qflag/weights.hpp"

using namespace qflag;

namespace {

struct CheckFailure {
  std::string message;
};

#define ACC_REQUIRE(cond, msg)                                        \
  do {                                                                \
    if (!(cond)) {                                                    \
      std::ostringstream os_;                                         \
      os_ << msg;                                                     \
      throw CheckFailure{os_.str() + " [" #cond "]"};                 \
    }                                                                 \
  } while (0)

std::vector<std::pair<CartanType, std::vector<int>>> cominuscule_expected(
    int max_rank) {
  std::vector<std::pair<CartanType, std::vector<int>>> out;
  for (int r = 1; r <= max_rank; ++r) {
    std::vector<int> all(r);
    for (int i = 0; i < r; ++i) all[i] = i + 1;
    out.push_back({CartanType{'A', r}, all});
  }
  for (int r = 2; r <= max_rank; ++r) out.push_back({CartanType{'B', r}, {1}});
  for (int r = 2; r <= max_rank; ++r) out.push_back({CartanType{'C', r}, {r}});
  for (int r = 4; r <= max_rank; ++r)
    out.push_back({CartanType{'D', r}, {1, r - 1, r}});
  out.push_back({CartanType{'E', 6}, {1, 6}});
  out.push_back({CartanType{'E', 7}, {7}});
  out.push_back({CartanType{'E', 8}, {}});
  out.push_back({CartanType{'F', 4}, {}});
  out.push_back({CartanType{'G', 2}, {}});
  return out;
}

std::vector<FlagDescriptor> all_flags(int max_rank) {
  std::vector<FlagDescriptor> flags;
  for (const auto& [type, nodes] : cominuscule_expected(max_rank))
    for (int node : nodes) flags.push_back({type, node});
  return flags;
}

// 1. Cominuscule classification table, ranks up to 8.
void criterion_classification() {
  for (const auto& [type, nodes] : cominuscule_expected(8)) {
    RootSystem rs(type);
    ACC_REQUIRE(cominuscule_nodes(rs) == nodes,
                "node list mismatch for " << type.name());
  }
}

// 2. |J1| = M for every irreducible flag up to rank 8.
void criterion_j1_counts() {
  for (const FlagDescriptor& flag : all_flags(8)) {
    RootSystem rs(flag.type);
    const int m = complex_dimension(rs, flag.node);
    Int total(0);
    for (const JEntry& e : j1_set(rs, flag.node)) total += e.mult;
    ACC_REQUIRE(total == m, "|J1| != M for " << flag.type.name() << " node "
                                             << flag.node);
  }
  ACC_REQUIRE(complex_dimension(RootSystem(CartanType{'E', 6}), 1) == 16,
              "E6 node 1 complex dimension");
  ACC_REQUIRE(complex_dimension(RootSystem(CartanType{'E', 7}), 7) == 27,
              "E7 node 7 complex dimension");
}

// 3. Relation verification on the named minuscule modules, plus an
// injected-fault module that must fail with a correct witness.
void criterion_relations() {
  const std::vector<FlagDescriptor> reps = {
      {{'A', 1}, 1}, {{'A', 3}, 2}, {{'B', 3}, 3}, {{'C', 3}, 1},
      {{'D', 4}, 4}, {{'D', 5}, 5}, {{'E', 6}, 1}};
  for (const FlagDescriptor& r : reps) {
    RootSystem rs(r.type);
    const MatrixRep rep = minuscule_rep(rs, r.node);
    const RelationReport report = verify_relations(rep);
    ACC_REQUIRE(report.families.size() == 7,
                "expected seven relation families");
    for (const FamilyResult& fam : report.families)
      ACC_REQUIRE(fam.pass, r.type.name() << " node " << r.node << " family "
                                          << fam.family);
  }

  RootSystem rs(CartanType{'A', 2});
  MatrixRep faulty = minuscule_rep(rs, 1);
  auto nz = faulty.E[0].first_nonzero();
  ACC_REQUIRE(nz.has_value(), "fault injection needs a nonzero entry");
  faulty.E[0].set(nz->first, nz->second,
                  *faulty.E[0].at(nz->first, nz->second) * Laurent(2));
  const RelationReport report = verify_relations(faulty);
  ACC_REQUIRE(!report.all_pass(), "fault not detected");
  const FamilyResult& ef = report.family("ef-commutator");
  ACC_REQUIRE(!ef.pass, "ef-commutator missed the fault");
  ACC_REQUIRE(ef.witness.has_value(), "missing witness");
  ACC_REQUIRE(ef.witness->i == 1 && ef.witness->j == 1,
              "witness points at the wrong generator pair");
  ACC_REQUIRE(ef.witness->row == ef.witness->col &&
                  (ef.witness->row == nz->first || ef.witness->row == nz->second),
              "witness points at the wrong entry");
}

// 4. q-arithmetic identities for all 0 <= k <= n <= 12.
void criterion_qarith() {
  auto qb = [](int n, int k) { return k < 0 || k > n ? Laurent(0) : qbinom(n, k); };
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const Laurent b = qbinom(n, k);
      if (n >= 1 && k >= 1)
        ACC_REQUIRE(b == Laurent::monomial(1, k) * qb(n - 1, k) +
                             Laurent::monomial(1, k - n) * qb(n - 1, k - 1),
                    "q-Pascal fails at (" << n << ", " << k << ")");
      ACC_REQUIRE(b.bar() == b, "bar-symmetry fails at (" << n << ", " << k << ")");
      for (const auto& [e, c] : b.terms())
        ACC_REQUIRE(c > 0, "negative coefficient at (" << n << ", " << k << ")");
      ACC_REQUIRE(b.eval_at(Rat(1)) == Rat(binomial(n, k)),
                  "classical limit fails at (" << n << ", " << k << ")");
    }
}

// 5. Z certificates across every flag up to rank 8 and |e| <= 100.
void criterion_certificates() {
  for (const FlagDescriptor& flag : all_flags(8)) {
    RootSystem rs(flag.type);
    const int s = flag.node;
    const ZData z = z_element(rs, s);
    const Int at_s = Int(rs.symmetrizers()[s - 1]) * rs.det_cartan();
    ACC_REQUIRE(at_s != 0, "degenerate crossed-node exponent");
    for (int j = 1; j <= rs.rank(); ++j)
      ACC_REQUIRE(z.commutation_exponents[j - 1] == (j == s ? at_s : Int(0)),
                  "commutation exponent at node " << j << " of "
                                                  << flag.type.name());
    const long w = omega01_character_exponent(rs, s);  // asserts uniformity
    ACC_REQUIRE(Int(std::abs(w)) == at_s,
                "omega01 magnitude for " << flag.type.name() << " node " << s);
    ACC_REQUIRE(torsion_certificate(rs, s).pass,
                "torsion certificate for " << flag.type.name());
    for (long e = -100; e <= 100; ++e) {
      ACC_REQUIRE(uniqueness_certificate(rs, s, e).pass,
                  "uniqueness at e=" << e << " for " << flag.type.name());
      ACC_REQUIRE(flatness_certificate(rs, s, e).pass,
                  "flatness at e=" << e << " for " << flag.type.name());
    }
  }
}

// 6. Form-dimension ladders: binomial, symmetric, summing to 4^M.
void criterion_dimension_ladder() {
  for (const FlagDescriptor& flag : all_flags(8)) {
    RootSystem rs(flag.type);
    const FlagInvariants inv = flag_invariants(rs, flag.node);
    const int len = 2 * inv.M + 1;
    ACC_REQUIRE(static_cast<int>(inv.form_dims.size()) == len,
                "ladder length for " << flag.type.name());
    // Independent Pascal-triangle route to the binomials.
    std::vector<Int> row{Int(1)};
    for (int n = 1; n <= 2 * inv.M; ++n) {
      std::vector<Int> next(n + 1, Int(1));
      for (int k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
      row = std::move(next);
    }
    Int sum(0);
    for (int k = 0; k < len; ++k) {
      ACC_REQUIRE(inv.form_dims[k] == row[k],
                  "ladder entry " << k << " for " << flag.type.name());
      ACC_REQUIRE(inv.form_dims[k] == inv.form_dims[len - 1 - k],
                  "ladder symmetry for " << flag.type.name());
      sum += inv.form_dims[k];
    }
    Int expected(1);
    expected <<= 2 * inv.M;
    ACC_REQUIRE(sum == expected, "ladder sum for " << flag.type.name());
  }
  const FlagInvariants cp2 = flag_invariants(RootSystem(CartanType{'A', 2}), 1);
  ACC_REQUIRE(cp2.form_dims == std::vector<Int>({1, 4, 6, 4, 1}),
              "projective plane ladder");
  const FlagInvariants gr = flag_invariants(RootSystem(CartanType{'A', 3}), 2);
  Int gr_sum(0);
  for (const Int& v : gr.form_dims) gr_sum += v;
  ACC_REQUIRE(gr.form_dims.size() == 9 && gr_sum == 256,
              "Grassmannian Gr(2,4) ladder");
}

// 7. Freudenthal multiplicity sums equal Weyl dimensions.
void criterion_weights() {
  std::vector<CartanType> types;
  for (int r = 1; r <= 6; ++r) types.push_back({'A', r});
  for (int r = 2; r <= 6; ++r) types.push_back({'B', r});
  for (int r = 2; r <= 6; ++r) types.push_back({'C', r});
  for (int r = 4; r <= 6; ++r) types.push_back({'D', r});
  types.push_back({'E', 6});
  types.push_back({'F', 4});
  types.push_back({'G', 2});
  for (const CartanType& t : types) {
    RootSystem rs(t);
    for (int node = 1; node <= rs.rank(); ++node) {
      const WeightVec mu = rs.fundamental_weight(node);
      ACC_REQUIRE(weight_multiplicities(rs, mu)->dimension() == weyl_dim(rs, mu),
                  "dimension mismatch for " << t.name() << " node " << node);
    }
  }
  RootSystem a2(CartanType{'A', 2});
  auto adjoint = weight_multiplicities(a2, WeightVec{{1, 1}});
  ACC_REQUIRE(adjoint->dimension() == 8, "A2 adjoint dimension");
  const Int* zero = adjoint->mult(a2.zero_weight());
  ACC_REQUIRE(zero != nullptr && *zero == 2, "A2 adjoint zero-weight multiplicity");
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;  // <= 0 means no budget stated
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cominuscule classification, ranks <= 8", 1.0, criterion_classification},
      {2, "|J1| = M for every irreducible flag, ranks <= 8", 30.0, criterion_j1_counts},
      {3, "defining relations on minuscule modules + injected fault", 120.0,
       criterion_relations},
      {4, "q-Pascal, bar-symmetry, positivity, classical limit, n <= 12", 1.0,
       criterion_qarith},
      {5, "Z commutation, omega01 uniformity, certificates |e| <= 100", 10.0,
       criterion_certificates},
      {6, "form-dimension ladders binom(2M, k)", 0.0, criterion_dimension_ladder},
      {7, "Freudenthal sums equal Weyl dimensions, ranks <= 6", 60.0,
       criterion_weights},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const CheckFailure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      std::ostringstream os;
      os << "time budget exceeded: " << elapsed << " s > " << c.budget_seconds
         << " s";
      error = os.str();
    }
    const bool pass = error.empty();
    failures += pass ? 0 : 1;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": "
              << c.label << " (" << std::fixed << elapsed << " s)";
    std::cout.unsetf(std::ios_base::floatfield);
    if (!pass) std::cout << "\n       " << error;
    std::cout << "\n";
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return EXIT_FAILURE;
  }
  std::cout << "all criteria passed\n";
  return EXIT_SUCCESS;
}
