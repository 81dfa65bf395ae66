#include "qflag/qmodule.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qflag {

SparseMat::SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  cols_data_.resize(cols);
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.cols_data_[i].emplace_back(i, Laurent(1));
  return m;
}

SparseMat SparseMat::diagonal(std::vector<Laurent> entries) {
  const int n = static_cast<int>(entries.size());
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i)
    if (!entries[i].is_zero())
      m.cols_data_[i].emplace_back(i, std::move(entries[i]));
  return m;
}

void SparseMat::set(int row, int col, Laurent v) {
  auto& column = cols_data_.at(col);
  auto it = std::lower_bound(
      column.begin(), column.end(), row,
      [](const std::pair<int, Laurent>& e, int r) { return e.first < r; });
  if (it != column.end() && it->first == row) {
    if (v.is_zero())
      column.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    column.emplace(it, row, std::move(v));
  }
}

void SparseMat::add_to(int row, int col, const Laurent& v) {
  if (v.is_zero()) return;
  auto& column = cols_data_.at(col);
  auto it = std::lower_bound(
      column.begin(), column.end(), row,
      [](const std::pair<int, Laurent>& e, int r) { return e.first < r; });
  if (it != column.end() && it->first == row) {
    it->second += v;
    if (it->second.is_zero()) column.erase(it);
  } else {
    column.emplace(it, row, v);
  }
}

const Laurent* SparseMat::at(int row, int col) const {
  const auto& column = cols_data_.at(col);
  auto it = std::lower_bound(
      column.begin(), column.end(), row,
      [](const std::pair<int, Laurent>& e, int r) { return e.first < r; });
  if (it != column.end() && it->first == row) return &it->second;
  return nullptr;
}

bool SparseMat::is_zero() const {
  return std::all_of(cols_data_.begin(), cols_data_.end(),
                     [](const auto& c) { return c.empty(); });
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.size();
  return n;
}

std::optional<std::pair<int, int>> SparseMat::first_nonzero() const {
  for (int c = 0; c < cols_; ++c)
    if (!cols_data_[c].empty()) return std::make_pair(cols_data_[c].front().first, c);
  return std::nullopt;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix dimension mismatch in *");
  SparseMat out(rows_, o.cols_);
  for (int j = 0; j < o.cols_; ++j) {
    std::map<int, Laurent> acc;
    for (const auto& [k, bv] : o.cols_data_[j])
      for (const auto& [i, av] : cols_data_[k]) acc[i] += av * bv;
    auto& column = out.cols_data_[j];
    for (auto& [i, v] : acc)
      if (!v.is_zero()) column.emplace_back(i, std::move(v));
  }
  return out;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::logic_error("matrix dimension mismatch in +");
  SparseMat out = *this;
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : o.cols_data_[j]) out.add_to(i, j, v);
  return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::logic_error("matrix dimension mismatch in -");
  SparseMat out = *this;
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : o.cols_data_[j]) out.add_to(i, j, -v);
  return out;
}

SparseMat SparseMat::scaled(const Laurent& c) const {
  SparseMat out(rows_, cols_);
  if (c.is_zero()) return out;
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : cols_data_[j])
      out.cols_data_[j].emplace_back(i, v * c);
  return out;
}

namespace {

// Diagonal entry of a diagonal matrix; structural zeros are not expected for
// K matrices of well-formed modules.
const Laurent& diag_entry(const SparseMat& m, int i) {
  const Laurent* v = m.at(i, i);
  if (!v) throw std::logic_error("expected a nonzero diagonal entry");
  return *v;
}

}  // namespace

MatrixRep minuscule_rep(const RootSystem& rs, int node) {
  const int r = rs.rank();
  if (node < 1 || node > r)
    throw std::invalid_argument("node " + std::to_string(node) +
                                " out of range for " + rs.type().name());
  const WeightVec mu = rs.fundamental_weight(node);
  auto diagram = weight_multiplicities(rs, mu);
  for (const auto& entry : diagram->entries)
    if (entry.mult != 1)
      throw std::invalid_argument(
          "node " + std::to_string(node) + " of " + rs.type().name() +
          " is not minuscule: weight " + to_string(entry.weight) +
          " has multiplicity " + entry.mult.get_str());
  const std::set<WeightVec> orbit = weyl_orbit(rs, mu);
  if (orbit.size() != diagram->entries.size()) {
    for (const auto& entry : diagram->entries)
      if (!orbit.count(entry.weight))
        throw std::invalid_argument(
            "node " + std::to_string(node) + " of " + rs.type().name() +
            " is not minuscule: weight " + to_string(entry.weight) +
            " lies outside the Weyl orbit of the highest weight");
    throw std::logic_error("orbit/diagram size mismatch without witness");
  }

  MatrixRep rep(rs);
  rep.dim = static_cast<int>(diagram->entries.size());
  rep.basis_weights.reserve(rep.dim);
  std::map<WeightVec, int> index;
  for (int b = 0; b < rep.dim; ++b) {
    rep.basis_weights.push_back(diagram->entries[b].weight);
    index.emplace(diagram->entries[b].weight, b);
  }

  rep.E.assign(r, SparseMat(rep.dim, rep.dim));
  rep.F.assign(r, SparseMat(rep.dim, rep.dim));
  rep.K.reserve(r);
  rep.Kinv.reserve(r);
  for (int i = 0; i < r; ++i) {
    const WeightVec alpha = rs.simple_root_as_weight(i + 1);
    for (int b = 0; b < rep.dim; ++b) {
      const WeightVec& w = rep.basis_weights[b];
      if (auto it = index.find(w + alpha); it != index.end())
        rep.E[i].set(it->second, b, Laurent(1));
      if (auto it = index.find(w - alpha); it != index.end())
        rep.F[i].set(it->second, b, Laurent(1));
    }
    std::vector<Laurent> kd, kdinv;
    kd.reserve(rep.dim);
    kdinv.reserve(rep.dim);
    for (int b = 0; b < rep.dim; ++b) {
      const int e = rs.symmetrizers()[i] * rep.basis_weights[b].coords[i];
      kd.push_back(Laurent::monomial(1, e));
      kdinv.push_back(Laurent::monomial(1, -e));
    }
    rep.K.push_back(SparseMat::diagonal(std::move(kd)));
    rep.Kinv.push_back(SparseMat::diagonal(std::move(kdinv)));
  }
  return rep;
}

MatrixRep trivial_rep(const RootSystem& rs) {
  MatrixRep rep(rs);
  rep.dim = 1;
  rep.basis_weights.push_back(rs.zero_weight());
  rep.E.assign(rs.rank(), SparseMat(1, 1));
  rep.F.assign(rs.rank(), SparseMat(1, 1));
  rep.K.assign(rs.rank(), SparseMat::identity(1));
  rep.Kinv.assign(rs.rank(), SparseMat::identity(1));
  return rep;
}

MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b) {
  if (!(a.rs.type() == b.rs.type()))
    throw std::invalid_argument("tensor_rep: mismatched root systems " +
                                a.rs.type().name() + " and " + b.rs.type().name());
  const int r = a.rs.rank();
  const int da = a.dim, db = b.dim;
  MatrixRep rep(a.rs);
  rep.dim = da * db;
  rep.basis_weights.reserve(rep.dim);
  for (int x = 0; x < da; ++x)
    for (int y = 0; y < db; ++y)
      rep.basis_weights.push_back(a.basis_weights[x] + b.basis_weights[y]);

  rep.E.assign(r, SparseMat(rep.dim, rep.dim));
  rep.F.assign(r, SparseMat(rep.dim, rep.dim));
  for (int i = 0; i < r; ++i) {
    std::vector<Laurent> kd, kdinv;
    kd.reserve(rep.dim);
    kdinv.reserve(rep.dim);
    for (int x = 0; x < da; ++x)
      for (int y = 0; y < db; ++y) {
        const int col = x * db + y;
        // E_i (x) K_i + 1 (x) E_i
        for (const auto& [row, v] : a.E[i].column(x))
          rep.E[i].add_to(row * db + y, col, v * diag_entry(b.K[i], y));
        for (const auto& [row, v] : b.E[i].column(y))
          rep.E[i].add_to(x * db + row, col, v);
        // F_i (x) 1 + Kinv_i (x) F_i
        for (const auto& [row, v] : a.F[i].column(x))
          rep.F[i].add_to(row * db + y, col, v);
        for (const auto& [row, v] : b.F[i].column(y))
          rep.F[i].add_to(x * db + row, col, diag_entry(a.Kinv[i], x) * v);
        kd.push_back(diag_entry(a.K[i], x) * diag_entry(b.K[i], y));
        kdinv.push_back(diag_entry(a.Kinv[i], x) * diag_entry(b.Kinv[i], y));
      }
    rep.K.push_back(SparseMat::diagonal(std::move(kd)));
    rep.Kinv.push_back(SparseMat::diagonal(std::move(kdinv)));
  }
  return rep;
}

bool RelationReport::all_pass() const {
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyResult& f) { return f.pass; });
}

const FamilyResult& RelationReport::family(const std::string& name) const {
  for (const auto& f : families)
    if (f.family == name) return f;
  throw std::invalid_argument("unknown relation family: " + name);
}

namespace {

// Records the first failing entry of a residual matrix; returns true when the
// family is still clean afterwards.
bool note_residual(FamilyResult& fam, const SparseMat& residual, int i, int j) {
  if (!fam.pass) return false;
  auto nz = residual.first_nonzero();
  if (!nz) return true;
  fam.pass = false;
  RelationWitness w;
  w.i = i;
  w.j = j;
  w.row = nz->first;
  w.col = nz->second;
  w.residual = residual.at(nz->first, nz->second)->str();
  fam.witness = w;
  return false;
}

}  // namespace

RelationReport verify_relations(const MatrixRep& rep) {
  const int r = rep.rs.rank();
  const auto& cartan = rep.rs.cartan();
  const auto& d = rep.rs.symmetrizers();

  RelationReport report;
  report.families = {FamilyResult{"kk-commute", true, {}},
                     FamilyResult{"k-inverse", true, {}},
                     FamilyResult{"ke", true, {}},
                     FamilyResult{"kf", true, {}},
                     FamilyResult{"ef-commutator", true, {}},
                     FamilyResult{"serre-e", true, {}},
                     FamilyResult{"serre-f", true, {}}};
  FamilyResult& kk = report.families[0];
  FamilyResult& kinv = report.families[1];
  FamilyResult& ke = report.families[2];
  FamilyResult& kf = report.families[3];
  FamilyResult& ef = report.families[4];
  FamilyResult& serre_e = report.families[5];
  FamilyResult& serre_f = report.families[6];

  const SparseMat id = SparseMat::identity(rep.dim);

  for (int i = 0; i < r && kk.pass; ++i)
    for (int j = i + 1; j < r && kk.pass; ++j)
      note_residual(kk, rep.K[i] * rep.K[j] - rep.K[j] * rep.K[i], i + 1, j + 1);

  for (int i = 0; i < r && kinv.pass; ++i) {
    note_residual(kinv, rep.K[i] * rep.Kinv[i] - id, i + 1, i + 1);
    if (kinv.pass)
      note_residual(kinv, rep.Kinv[i] * rep.K[i] - id, i + 1, i + 1);
  }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const int e = d[i] * cartan[i][j];
      if (ke.pass)
        note_residual(ke,
                      rep.K[i] * rep.E[j] -
                          (rep.E[j] * rep.K[i]).scaled(Laurent::monomial(1, e)),
                      i + 1, j + 1);
      if (kf.pass)
        note_residual(kf,
                      rep.K[i] * rep.F[j] -
                          (rep.F[j] * rep.K[i]).scaled(Laurent::monomial(1, -e)),
                      i + 1, j + 1);
    }

  for (int i = 0; i < r && ef.pass; ++i)
    for (int j = 0; j < r && ef.pass; ++j) {
      SparseMat lhs = rep.E[i] * rep.F[j] - rep.F[j] * rep.E[i];
      if (i == j) {
        std::vector<Laurent> diag;
        diag.reserve(rep.dim);
        for (int b = 0; b < rep.dim; ++b)
          diag.push_back(qint_signed(rep.basis_weights[b].coords[i], d[i]));
        lhs = lhs - SparseMat::diagonal(std::move(diag));
      }
      note_residual(ef, lhs, i + 1, j + 1);
    }

  // Quantum Serre families. Powers of E_i and the partial products E_j E_i^s
  // are accumulated incrementally.
  auto serre = [&](const std::vector<SparseMat>& gen, FamilyResult& fam) {
    for (int i = 0; i < r && fam.pass; ++i) {
      int max_n = 0;
      for (int j = 0; j < r; ++j)
        if (j != i) max_n = std::max(max_n, 1 - cartan[i][j]);
      std::vector<SparseMat> pow{id};
      for (int t = 1; t <= max_n; ++t) pow.push_back(pow.back() * gen[i]);
      for (int j = 0; j < r && fam.pass; ++j) {
        if (j == i) continue;
        const int n = 1 - cartan[i][j];
        SparseMat acc(rep.dim, rep.dim);
        SparseMat tail = gen[j];  // gen_j * gen_i^s, updated per step
        for (int s = 0; s <= n; ++s) {
          Laurent coeff = qbinom(n, s, d[i]);
          if (s % 2 != 0) coeff = -coeff;
          acc = acc + (pow[n - s] * tail).scaled(coeff);
          if (s < n) tail = tail * gen[i];
        }
        note_residual(fam, acc, i + 1, j + 1);
      }
    }
  };
  serre(rep.E, serre_e);
  serre(rep.F, serre_f);

  return report;
}

}  // namespace qflag
