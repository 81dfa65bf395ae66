#include <random>

#include "doctest.h"
#include "qflag/rootdata.hpp"

using namespace qflag;

namespace {

std::vector<CartanType> all_types_up_to(int max_rank) {
  std::vector<CartanType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({'A', r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({'B', r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({'C', r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({'D', r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({'E', r});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

long expected_root_count(const CartanType& t) {
  const long r = t.rank;
  switch (t.series) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

// Leading principal minors by exact cofactor expansion, independent of the
// library's Bareiss path.
Int det_recursive(const std::vector<std::vector<Int>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int acc(0);
  for (int j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][j] * det_recursive(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

RootVec root_from(std::vector<int> c) { return RootVec{std::move(c)}; }

}  // namespace

TEST_CASE("rank bounds are enforced") {
  CHECK_THROWS_AS(RootSystem(CartanType{'A', 0}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'B', 1}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'C', 1}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'D', 3}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'E', 5}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'E', 9}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'F', 5}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'G', 3}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(CartanType{'H', 2}), std::invalid_argument);
  CHECK_NOTHROW(RootSystem(CartanType{'A', 1}));
  CHECK_NOTHROW(RootSystem(CartanType{'E', 8}));
}

TEST_CASE("A2 construction") {
  RootSystem rs(CartanType{'A', 2});
  CHECK(rs.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(rs.symmetrizers() == std::vector<int>{1, 1});
  CHECK(rs.positive_roots().size() == 3);
  CHECK(rs.highest_root() == root_from({1, 1}));
}

TEST_CASE("B2 positive roots and symmetrizers") {
  RootSystem rs(CartanType{'B', 2});
  CHECK(rs.symmetrizers() == std::vector<int>{2, 1});
  const std::vector<RootVec> expected = {root_from({0, 1}), root_from({1, 0}),
                                         root_from({1, 1}), root_from({1, 2})};
  CHECK(rs.positive_roots() == expected);
  CHECK(rs.highest_root() == root_from({1, 2}));
}

TEST_CASE("G2 highest root") {
  RootSystem rs(CartanType{'G', 2});
  CHECK(rs.cartan() == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
  CHECK(rs.symmetrizers() == std::vector<int>{1, 3});
  CHECK(rs.positive_roots().size() == 6);
  CHECK(rs.highest_root() == root_from({3, 2}));
}

TEST_CASE("Bourbaki arrow directions") {
  RootSystem b3(CartanType{'B', 3});
  CHECK(b3.cartan()[2][1] == -2);  // short node r pairs -2 against r-1
  CHECK(b3.cartan()[1][2] == -1);
  RootSystem c3(CartanType{'C', 3});
  CHECK(c3.cartan()[1][2] == -2);  // long node r receives -2
  CHECK(c3.cartan()[2][1] == -1);
  RootSystem f4(CartanType{'F', 4});
  CHECK(f4.cartan()[2][1] == -2);
  CHECK(f4.cartan()[1][2] == -1);
  CHECK(f4.symmetrizers() == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("positive root counts match the classical closed forms") {
  for (const CartanType& t : all_types_up_to(8)) {
    RootSystem rs(t);
    CHECK_MESSAGE(static_cast<long>(rs.positive_roots().size()) ==
                      expected_root_count(t),
                  t.name());
  }
}

TEST_CASE("reflections permute the roots") {
  for (const CartanType& t : {CartanType{'A', 3}, CartanType{'B', 3},
                              CartanType{'C', 3}, CartanType{'D', 4},
                              CartanType{'F', 4}, CartanType{'G', 2}}) {
    RootSystem rs(t);
    const int r = rs.rank();
    for (const RootVec& beta : rs.positive_roots())
      for (int i = 0; i < r; ++i) {
        long pairing = 0;
        for (int j = 0; j < r; ++j)
          pairing += static_cast<long>(rs.cartan()[i][j]) * beta.coords[j];
        RootVec refl = beta;
        refl.coords[i] -= static_cast<int>(pairing);
        RootVec neg = refl;
        for (int& x : neg.coords) x = -x;
        const bool found =
            std::count(rs.positive_roots().begin(), rs.positive_roots().end(), refl) +
                std::count(rs.positive_roots().begin(), rs.positive_roots().end(), neg) ==
            1;
        CHECK(found);
      }
  }
}

TEST_CASE("highest root is dominant") {
  for (const CartanType& t : all_types_up_to(8)) {
    RootSystem rs(t);
    for (int m : rs.to_weight_coords(rs.highest_root()).coords) CHECK(m >= 0);
  }
}

TEST_CASE("symmetrized Cartan matrix is positive definite") {
  for (const CartanType& t : all_types_up_to(8)) {
    RootSystem rs(t);
    const int r = rs.rank();
    for (int k = 1; k <= r; ++k) {
      std::vector<std::vector<Int>> lead(k, std::vector<Int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          lead[i][j] = Int(rs.symmetrizers()[i]) * rs.cartan()[i][j];
          CHECK(lead[i][j] == Int(rs.symmetrizers()[j]) * rs.cartan()[j][i]);
        }
      CHECK(det_recursive(lead) > 0);
    }
  }
}

TEST_CASE("Cartan determinants") {
  for (int r = 1; r <= 8; ++r)
    CHECK(RootSystem(CartanType{'A', r}).det_cartan() == r + 1);
  for (int r = 2; r <= 8; ++r) {
    CHECK(RootSystem(CartanType{'B', r}).det_cartan() == 2);
    CHECK(RootSystem(CartanType{'C', r}).det_cartan() == 2);
  }
  for (int r = 4; r <= 8; ++r)
    CHECK(RootSystem(CartanType{'D', r}).det_cartan() == 4);
  CHECK(RootSystem(CartanType{'E', 6}).det_cartan() == 3);
  CHECK(RootSystem(CartanType{'E', 7}).det_cartan() == 2);
  CHECK(RootSystem(CartanType{'E', 8}).det_cartan() == 1);
  CHECK(RootSystem(CartanType{'F', 4}).det_cartan() == 1);
  CHECK(RootSystem(CartanType{'G', 2}).det_cartan() == 1);
}

TEST_CASE("adjugate entries are strictly positive and invert exactly") {
  for (const CartanType& t : all_types_up_to(8)) {
    RootSystem rs(t);
    const int r = rs.rank();
    const auto& adj = rs.adjugate_cartan();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) CHECK(adj[i][j] > 0);
    // A * A^{-1} = I over the rationals, exactly.
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rat acc(0);
        for (int k = 0; k < r; ++k)
          acc += Rat(rs.cartan()[i][k]) * rs.cartan_inverse()[k][j];
        CHECK(acc == (i == j ? Rat(1) : Rat(0)));
      }
  }
}

TEST_CASE("A1 adjugate pins det(A) fw_1 = alpha_1") {
  RootSystem rs(CartanType{'A', 1});
  CHECK(rs.det_cartan() == 2);
  CHECK(rs.adjugate_cartan() == std::vector<std::vector<Int>>{{Int(1)}});
}

TEST_CASE("bilinear form on literal inputs") {
  RootSystem a2(CartanType{'A', 2});
  const RootVec alpha1 = root_from({1, 0});
  CHECK(a2.bilinear(alpha1, alpha1) == Rat(2));
  CHECK(a2.bilinear(a2.fundamental_weight(1), alpha1) == Rat(1));
  RootSystem b2(CartanType{'B', 2});
  CHECK(b2.bilinear(b2.fundamental_weight(1), root_from({1, 0})) == Rat(2));
  CHECK(b2.bilinear(root_from({1, 0}), root_from({1, 0})) == Rat(4));
  CHECK(b2.bilinear(root_from({0, 1}), root_from({0, 1})) == Rat(2));
}

TEST_CASE("bilinear form is symmetric and matches d_i a_ij") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const CartanType& t : {CartanType{'B', 3}, CartanType{'C', 4},
                              CartanType{'F', 4}, CartanType{'G', 2}}) {
    RootSystem rs(t);
    const int r = rs.rank();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        RootVec ei{std::vector<int>(r, 0)}, ej{std::vector<int>(r, 0)};
        ei.coords[i] = 1;
        ej.coords[j] = 1;
        CHECK(rs.bilinear(ei, ej) == Rat(Int(rs.symmetrizers()[i]) * rs.cartan()[i][j]));
        // (fw_i, alpha_j) = d_j delta_ij
        CHECK(rs.bilinear(rs.fundamental_weight(i + 1), ej) ==
              (i == j ? Rat(rs.symmetrizers()[j]) : Rat(0)));
      }
    for (int trial = 0; trial < 20; ++trial) {
      WeightVec x{std::vector<int>(r)}, y{std::vector<int>(r)};
      for (int k = 0; k < r; ++k) {
        x.coords[k] = coord(rng);
        y.coords[k] = coord(rng);
      }
      CHECK(rs.bilinear(x, y) == rs.bilinear(y, x));
    }
  }
}

TEST_CASE("basis conversions round-trip") {
  for (const CartanType& t : {CartanType{'A', 4}, CartanType{'D', 5},
                              CartanType{'F', 4}}) {
    RootSystem rs(t);
    for (const RootVec& beta : rs.positive_roots()) {
      const std::vector<Rat> back = rs.to_root_coords(rs.to_weight_coords(beta));
      for (int k = 0; k < rs.rank(); ++k) CHECK(back[k] == Rat(beta.coords[k]));
    }
  }
}
