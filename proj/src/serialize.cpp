#include "qflag/serialize.hpp"

#include <sstream>

namespace qflag {

using nlohmann::json;

json root_system_json(const RootSystem& rs) {
  json j;
  j["type"] = std::string(1, rs.type().series);
  j["rank"] = rs.rank();
  j["cartan_matrix"] = rs.cartan();
  j["d"] = rs.symmetrizers();
  json roots = json::array();
  for (const RootVec& beta : rs.positive_roots()) roots.push_back(beta.coords);
  j["positive_roots"] = std::move(roots);
  j["highest_root"] = rs.highest_root().coords;
  return j;
}

json weight_diagram_json(const WeightDiagram& wd) {
  json j;
  j["highest"] = wd.highest.coords;
  json weights = json::array();
  for (const WeightEntry& e : wd.entries) {
    json w;
    w["weight"] = e.weight.coords;
    w["mult"] = to_long_checked(e.mult);
    weights.push_back(std::move(w));
  }
  j["weights"] = std::move(weights);
  return j;
}

namespace {

json sparse_json(const SparseMat& m) {
  json entries = json::array();
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      json e;
      e["row"] = r;
      e["col"] = c;
      e["value"] = v.str();
      entries.push_back(std::move(e));
    }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

json sparse_family_json(const std::vector<SparseMat>& mats) {
  json arr = json::array();
  for (const SparseMat& m : mats) arr.push_back(sparse_json(m));
  return arr;
}

}  // namespace

json matrix_rep_json(const MatrixRep& rep) {
  json j;
  j["type"] = std::string(1, rep.rs.type().series);
  j["rank"] = rep.rs.rank();
  j["dim"] = rep.dim;
  json weights = json::array();
  for (const WeightVec& w : rep.basis_weights) weights.push_back(w.coords);
  j["basis_weights"] = std::move(weights);
  j["E"] = sparse_family_json(rep.E);
  j["F"] = sparse_family_json(rep.F);
  j["K"] = sparse_family_json(rep.K);
  j["Kinv"] = sparse_family_json(rep.Kinv);
  return j;
}

json relation_report_json(const RelationReport& report) {
  json fams;
  for (const FamilyResult& f : report.families) {
    json entry;
    entry["pass"] = f.pass;
    if (f.witness) {
      json w;
      w["i"] = f.witness->i;
      w["j"] = f.witness->j;
      w["row"] = f.witness->row;
      w["col"] = f.witness->col;
      w["residual"] = f.witness->residual;
      entry["witness"] = std::move(w);
    }
    fams[f.family] = std::move(entry);
  }
  json j;
  j["families"] = std::move(fams);
  j["all_pass"] = report.all_pass();
  return j;
}

json flag_invariants_json(const FlagInvariants& inv) {
  json j;
  j["type"] = std::string(1, inv.type.series);
  j["rank"] = inv.type.rank;
  j["node"] = inv.node;
  j["M"] = inv.M;
  j["detA"] = inv.detA;
  j["d_s"] = inv.d_s;
  j["N"] = inv.N;
  j["a"] = inv.a;
  json j1 = json::array();
  for (const JEntry& e : inv.j1) {
    json w;
    w["weight"] = e.weight.coords;
    w["mult"] = to_long_checked(e.mult);
    j1.push_back(std::move(w));
  }
  j["j1"] = std::move(j1);
  j["j1_total"] = inv.j1_total;
  j["omega01_exponent"] = inv.omega01_exponent;
  json dims = json::array();
  for (const Int& v : inv.form_dims) dims.push_back(to_long_checked(v));
  j["form_dims"] = std::move(dims);
  return j;
}

json cert_result_json(const CertResult& cert) {
  json j;
  j["kind"] = cert_kind_name(cert.kind);
  j["pass"] = cert.pass;
  j["lhs_exponent"] = cert.lhs_exponent;
  j["rhs_exponent"] = cert.rhs_exponent;
  j["explanation"] = cert.explanation;
  return j;
}

std::string classify_csv_header() { return "type,rank,node,M,detA"; }

std::string classify_csv_row(const FlagInvariants& inv) {
  std::ostringstream os;
  os << inv.type.series << "," << inv.type.rank << "," << inv.node << ","
     << inv.M << "," << inv.detA;
  return os.str();
}

std::string invariants_csv_header() {
  return "type,rank,node,M,detA,d_s,N,J1,omega01_exponent";
}

std::string invariants_csv_row(const FlagInvariants& inv) {
  std::ostringstream os;
  os << inv.type.series << "," << inv.type.rank << "," << inv.node << ","
     << inv.M << "," << inv.detA << "," << inv.d_s << "," << inv.N << ","
     << inv.j1_total << "," << inv.omega01_exponent;
  return os.str();
}

std::string relations_csv_header() {
  return "type,rank,node,family,pass,witness_i,witness_j,witness_row,witness_col";
}

std::string relations_csv_row(const CartanType& type, int node,
                              const FamilyResult& fam) {
  std::ostringstream os;
  os << type.series << "," << type.rank << "," << node << "," << fam.family
     << "," << (fam.pass ? 1 : 0) << ",";
  if (fam.witness)
    os << fam.witness->i << "," << fam.witness->j << "," << fam.witness->row
       << "," << fam.witness->col;
  else
    os << ",,,";
  return os.str();
}

std::string certs_csv_header() {
  return "type,rank,node,kind,e,lhs_exponent,rhs_exponent,pass";
}

std::string certs_csv_row(const CartanType& type, int node,
                          const CertResult& cert, const std::string& e_field) {
  std::ostringstream os;
  os << type.series << "," << type.rank << "," << node << ","
     << cert_kind_name(cert.kind) << "," << e_field << "," << cert.lhs_exponent
     << "," << cert.rhs_exponent << "," << (cert.pass ? 1 : 0);
  return os.str();
}

}  // namespace qflag
