#include "qflag/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qflag {

namespace {

std::string coords_str(const std::vector<int>& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    os << c[i];
  }
  os << ")";
  return os.str();
}

// Fraction-free determinant (Bareiss). n <= 8 here, so cost is irrelevant;
// exactness is the point.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return Int(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int minor_det(const std::vector<std::vector<int>>& a, int drop_row, int drop_col) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Int>> m;
  m.reserve(n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == drop_row) continue;
    std::vector<Int> row;
    row.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == drop_col) continue;
      row.emplace_back(a[i][j]);
    }
    m.push_back(std::move(row));
  }
  return bareiss_det(std::move(m));
}

}  // namespace

void CartanType::validate() const {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
      throw std::invalid_argument(std::string("unknown series '") + series +
                                  "': expected one of A-G");
  }
  if (!ok)
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " out of range for series " + series);
}

std::string CartanType::name() const {
  return std::string(1, series) + std::to_string(rank);
}

WeightVec operator+(const WeightVec& a, const WeightVec& b) {
  WeightVec out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

WeightVec operator-(const WeightVec& a, const WeightVec& b) {
  WeightVec out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

std::string to_string(const WeightVec& w) { return coords_str(w.coords); }
std::string to_string(const RootVec& v) { return coords_str(v.coords); }

RootSystem::RootSystem(CartanType t) : type_(t) {
  type_.validate();
  build_cartan();
  build_positive_roots();
  build_inverse();
}

void RootSystem::build_cartan() {
  const int r = type_.rank;
  cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  d_.assign(r, 1);

  // 1-based helper; a_ij / a_ji are the off-diagonal Cartan entries.
  auto edge = [&](int i, int j, int aij, int aji) {
    cartan_[i - 1][j - 1] = aij;
    cartan_[j - 1][i - 1] = aji;
  };
  auto chain = [&](int from, int to) {
    for (int k = from; k < to; ++k) edge(k, k + 1, -1, -1);
  };

  switch (type_.series) {
    case 'A':
      chain(1, r);
      break;
    case 'B':  // node r short
      chain(1, r - 1);
      edge(r - 1, r, -1, -2);
      d_.assign(r, 2);
      d_[r - 1] = 1;
      break;
    case 'C':  // node r long
      chain(1, r - 1);
      edge(r - 1, r, -2, -1);
      d_[r - 1] = 2;
      break;
    case 'D':  // fork at node r-2
      chain(1, r - 1);
      edge(r - 2, r, -1, -1);
      break;
    case 'E':  // branch node 2 hangs off node 4
      edge(1, 3, -1, -1);
      edge(3, 4, -1, -1);
      edge(2, 4, -1, -1);
      chain(4, r);
      break;
    case 'F':  // nodes 1,2 long; 3,4 short
      edge(1, 2, -1, -1);
      edge(2, 3, -1, -2);
      edge(3, 4, -1, -1);
      d_ = {2, 2, 1, 1};
      break;
    case 'G':  // node 1 short, node 2 long
      edge(1, 2, -3, -1);
      d_ = {1, 3};
      break;
  }

  // Construction sanity: D*A symmetric, shortest simple root normalised.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (Int(d_[i]) * cartan_[i][j] != Int(d_[j]) * cartan_[j][i])
        throw std::logic_error("Cartan symmetrization failed for " + type_.name());
  if (*std::min_element(d_.begin(), d_.end()) != 1)
    throw std::logic_error("symmetrizer normalisation failed for " + type_.name());
}

void RootSystem::build_positive_roots() {
  const int r = type_.rank;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  // Reflection closure: every positive root arises from a simple root by
  // simple reflections that stay positive.
  while (!queue.empty()) {
    std::vector<int> c = std::move(queue.back());
    queue.pop_back();
    for (int i = 0; i < r; ++i) {
      long pairing = 0;
      for (int j = 0; j < r; ++j) pairing += static_cast<long>(cartan_[i][j]) * c[j];
      std::vector<int> c2 = c;
      c2[i] -= static_cast<int>(pairing);
      const bool positive =
          std::all_of(c2.begin(), c2.end(), [](int x) { return x >= 0; }) &&
          std::any_of(c2.begin(), c2.end(), [](int x) { return x != 0; });
      if (positive && seen.insert(c2).second) queue.push_back(std::move(c2));
    }
  }

  positive_roots_.reserve(seen.size());
  for (const auto& c : seen) positive_roots_.push_back(RootVec{c});
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [&](const RootVec& a, const RootVec& b) {
              const int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a.coords < b.coords;
            });

  const int top_height = height(positive_roots_.back());
  int at_top = 0;
  for (const auto& root : positive_roots_)
    if (height(root) == top_height) ++at_top;
  if (at_top != 1)
    throw std::logic_error("highest root not unique for " + type_.name());
  highest_root_ = positive_roots_.back();
  for (int m : to_weight_coords(highest_root_).coords)
    if (m < 0) throw std::logic_error("highest root not dominant for " + type_.name());
}

void RootSystem::build_inverse() {
  const int r = type_.rank;
  {
    std::vector<std::vector<Int>> m(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m[i][j] = cartan_[i][j];
    det_ = bareiss_det(std::move(m));
  }
  if (det_ <= 0) throw std::logic_error("Cartan determinant not positive");

  adjugate_.assign(r, std::vector<Int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Int cof = minor_det(cartan_, j, i);  // adj = transposed cofactors
      if ((i + j) % 2 != 0) cof = -cof;
      adjugate_[i][j] = std::move(cof);
    }

  inverse_.assign(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat v(adjugate_[i][j], det_);
      v.canonicalize();
      inverse_[i][j] = std::move(v);
    }
}

WeightVec RootSystem::fundamental_weight(int node) const {
  if (node < 1 || node > rank())
    throw std::invalid_argument("node " + std::to_string(node) +
                                " out of range for " + type_.name());
  WeightVec w{std::vector<int>(rank(), 0)};
  w.coords[node - 1] = 1;
  return w;
}

WeightVec RootSystem::zero_weight() const {
  return WeightVec{std::vector<int>(rank(), 0)};
}

WeightVec RootSystem::rho() const {
  return WeightVec{std::vector<int>(rank(), 1)};
}

WeightVec RootSystem::to_weight_coords(const RootVec& v) const {
  const int r = rank();
  WeightVec w{std::vector<int>(r, 0)};
  for (int i = 0; i < r; ++i) {
    long acc = 0;
    for (int j = 0; j < r; ++j) acc += static_cast<long>(cartan_[i][j]) * v.coords[j];
    w.coords[i] = static_cast<int>(acc);
  }
  return w;
}

std::vector<Rat> RootSystem::to_root_coords(const WeightVec& w) const {
  const int r = rank();
  std::vector<Rat> c(r, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c[i] += inverse_[i][j] * Rat(w.coords[j]);
  return c;
}

WeightVec RootSystem::simple_root_as_weight(int node) const {
  if (node < 1 || node > rank())
    throw std::invalid_argument("node " + std::to_string(node) +
                                " out of range for " + type_.name());
  RootVec alpha{std::vector<int>(rank(), 0)};
  alpha.coords[node - 1] = 1;
  return to_weight_coords(alpha);
}

int RootSystem::height(const RootVec& v) const {
  return std::accumulate(v.coords.begin(), v.coords.end(), 0);
}

Rat RootSystem::bilinear(const RootVec& x, const RootVec& y) const {
  // x^T (D A) y
  Int acc(0);
  const int r = rank();
  for (int i = 0; i < r; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < r; ++j)
      acc += Int(x.coords[i]) * d_[i] * cartan_[i][j] * y.coords[j];
  }
  return Rat(acc);
}

Rat RootSystem::bilinear(const WeightVec& x, const RootVec& y) const {
  // (weight, alpha_j) = d_j * m_j summed over the root's coordinates.
  Int acc(0);
  for (int j = 0; j < rank(); ++j)
    acc += Int(y.coords[j]) * d_[j] * x.coords[j];
  return Rat(acc);
}

Rat RootSystem::bilinear(const RootVec& x, const WeightVec& y) const {
  return bilinear(y, x);
}

Rat RootSystem::bilinear(const WeightVec& x, const WeightVec& y) const {
  const std::vector<Rat> c = to_root_coords(x);
  Rat acc(0);
  for (int j = 0; j < rank(); ++j)
    acc += c[j] * Rat(Int(d_[j]) * y.coords[j]);
  return acc;
}

}  // namespace qflag
