#include "qflag/weights.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qflag {

Int WeightDiagram::dimension() const {
  Int acc(0);
  for (const auto& e : entries) acc += e.mult;
  return acc;
}

const Int* WeightDiagram::mult(const WeightVec& w) const {
  auto it = index.find(w);
  return it == index.end() ? nullptr : &entries[it->second].mult;
}

bool is_dominant(const WeightVec& w) {
  return std::all_of(w.coords.begin(), w.coords.end(),
                     [](int x) { return x >= 0; });
}

WeightVec simple_reflection(const RootSystem& rs, const WeightVec& w, int node) {
  const int i = node - 1;
  const int r = rs.rank();
  if (i < 0 || i >= r)
    throw std::invalid_argument("simple_reflection: node out of range");
  WeightVec out = w;
  const int pairing = w.coords[i];  // (w, coroot_i)
  for (int k = 0; k < r; ++k) out.coords[k] -= pairing * rs.cartan()[k][i];
  return out;
}

WeightVec dominant_representative(const RootSystem& rs, WeightVec w,
                                  std::vector<int>* offset) {
  const int r = rs.rank();
  // Reflect at any negative coordinate until dominant; each step raises the
  // weight strictly, so the walk terminates inside the finite orbit.
  for (;;) {
    int i = -1;
    for (int k = 0; k < r; ++k)
      if (w.coords[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) return w;
    const int pairing = w.coords[i];
    if (offset) (*offset)[i] += pairing;
    for (int k = 0; k < r; ++k) w.coords[k] -= pairing * rs.cartan()[k][i];
  }
}

std::set<WeightVec> weyl_orbit(const RootSystem& rs, const WeightVec& w) {
  std::set<WeightVec> orbit{w};
  std::vector<WeightVec> stack{w};
  while (!stack.empty()) {
    WeightVec cur = std::move(stack.back());
    stack.pop_back();
    for (int node = 1; node <= rs.rank(); ++node) {
      if (cur.coords[node - 1] == 0) continue;  // fixed by this reflection
      WeightVec next = simple_reflection(rs, cur, node);
      if (orbit.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return orbit;
}

namespace {

// Per-positive-root data used by the Freudenthal sums, all integers.
struct RootInfo {
  std::vector<int> weight_coords;  // over the fundamental weights
  long norm = 0;                   // (beta, beta)
  std::vector<long> dw;            // dw[j] = root coordinate j times d_j
};

std::shared_ptr<const WeightDiagram> compute_diagram(const RootSystem& rs,
                                                     const WeightVec& mu) {
  const int r = rs.rank();
  const auto& d = rs.symmetrizers();

  // Membership in the weight system: the dominant conjugate must sit below mu
  // by a nonnegative combination of simple roots.
  auto is_weight = [&](const WeightVec& w, const std::vector<int>& offset) {
    std::vector<int> off = offset;
    dominant_representative(rs, w, &off);
    return std::all_of(off.begin(), off.end(), [](int x) { return x >= 0; });
  };

  // Breadth-first closure under subtraction of simple roots. Every weight of
  // V_mu other than mu has a weight directly above it, so this finds all of
  // them, level by level.
  std::map<WeightVec, std::vector<int>> discovered;
  discovered.emplace(mu, std::vector<int>(r, 0));
  std::vector<WeightVec> level{mu};
  while (!level.empty()) {
    std::vector<WeightVec> next;
    for (const WeightVec& w : level) {
      const std::vector<int>& off = discovered.at(w);
      for (int i = 0; i < r; ++i) {
        WeightVec cand = w;
        for (int k = 0; k < r; ++k) cand.coords[k] -= rs.cartan()[k][i];
        if (discovered.count(cand)) continue;
        std::vector<int> cand_off = off;
        ++cand_off[i];
        if (!is_weight(cand, cand_off)) continue;
        discovered.emplace(cand, std::move(cand_off));
        next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }

  auto diagram = std::make_shared<WeightDiagram>();
  diagram->highest = mu;
  for (auto& [w, off] : discovered) {
    WeightEntry e;
    e.weight = w;
    e.depth = std::accumulate(off.begin(), off.end(), 0);
    e.root_offset = std::move(off);
    diagram->entries.push_back(std::move(e));
  }
  std::sort(diagram->entries.begin(), diagram->entries.end(),
            [](const WeightEntry& a, const WeightEntry& b) {
              return std::tie(a.depth, a.weight.coords) <
                     std::tie(b.depth, b.weight.coords);
            });
  for (std::size_t i = 0; i < diagram->entries.size(); ++i)
    diagram->index.emplace(diagram->entries[i].weight, i);

  std::vector<RootInfo> roots;
  roots.reserve(rs.positive_roots().size());
  for (const RootVec& beta : rs.positive_roots()) {
    RootInfo info;
    info.weight_coords = rs.to_weight_coords(beta).coords;
    info.dw.resize(r);
    for (int j = 0; j < r; ++j)
      info.dw[j] = static_cast<long>(beta.coords[j]) * d[j];
    for (int j = 0; j < r; ++j)
      info.norm += info.dw[j] * info.weight_coords[j];
    roots.push_back(std::move(info));
  }

  // Freudenthal recursion in depth order:
  //   mult(w) * (mu + w + 2 rho, mu - w) = 2 * sum_{beta>0} sum_{k>=1}
  //                                        (w + k beta, beta) mult(w + k beta)
  for (auto& entry : diagram->entries) {
    if (entry.depth == 0) {
      entry.mult = 1;
      continue;
    }
    Int numer(0);
    for (const RootInfo& beta : roots) {
      long base = 0;  // (w, beta)
      for (int j = 0; j < r; ++j) base += beta.dw[j] * entry.weight.coords[j];
      for (int k = 1;; ++k) {
        WeightVec up = entry.weight;
        for (int j = 0; j < r; ++j) up.coords[j] += k * beta.weight_coords[j];
        auto it = diagram->index.find(up);
        if (it == diagram->index.end()) break;  // root strings are unbroken
        numer += Int(base + k * beta.norm) * diagram->entries[it->second].mult;
      }
    }
    numer *= 2;
    Int denom(0);
    for (int j = 0; j < r; ++j)
      denom += Int(entry.root_offset[j]) * d[j] *
               (Int(mu.coords[j]) + entry.weight.coords[j] + 2);
    if (denom <= 0 || !mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
      throw std::logic_error("Freudenthal recursion produced a non-integer");
    entry.mult = numer / denom;
    if (entry.mult <= 0)
      throw std::logic_error("Freudenthal recursion produced a non-positive multiplicity");
  }
  return diagram;
}

}  // namespace

std::shared_ptr<const WeightDiagram> weight_multiplicities(const RootSystem& rs,
                                                           const WeightVec& mu) {
  if (static_cast<int>(mu.coords.size()) != rs.rank())
    throw std::invalid_argument("weight_multiplicities: rank mismatch");
  if (!is_dominant(mu))
    throw std::invalid_argument("weight_multiplicities: " + to_string(mu) +
                                " is not dominant");

  using Key = std::tuple<char, int, std::vector<int>>;
  static std::mutex cache_mutex;
  static std::map<Key, std::shared_ptr<const WeightDiagram>> cache;

  const Key key{rs.type().series, rs.rank(), mu.coords};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto diagram = compute_diagram(rs, mu);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, std::move(diagram)).first->second;
}

Int weyl_dim(const RootSystem& rs, const WeightVec& mu) {
  if (static_cast<int>(mu.coords.size()) != rs.rank())
    throw std::invalid_argument("weyl_dim: rank mismatch");
  if (!is_dominant(mu))
    throw std::invalid_argument("weyl_dim: " + to_string(mu) + " is not dominant");
  const auto& d = rs.symmetrizers();
  Int num(1), den(1);
  for (const RootVec& beta : rs.positive_roots()) {
    long a = 0, b = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      const long dj = static_cast<long>(beta.coords[j]) * d[j];
      a += dj * (mu.coords[j] + 1);  // (mu + rho, beta)
      b += dj;                       // (rho, beta)
    }
    num *= a;
    den *= b;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("Weyl dimension formula produced a non-integer");
  return num / den;
}

}  // namespace qflag
