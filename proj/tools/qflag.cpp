// qflag: exact invariants of irreducible quantum flag manifolds.
//
// Subcommands: classify, flag-report, verify-relations, certify, qtable.
// Exit status: 0 all requested checks pass, 1 a check failed, 2 invalid input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qflag/flagatlas.hpp"
#include "qflag/laurent.hpp"
#include "qflag/qmodule.hpp"
#include "qflag/serialize.hpp"

namespace {

using nlohmann::json;
using namespace qflag;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

char parse_series(const std::string& s) {
  if (s.size() != 1 || s[0] < 'A' || s[0] > 'G')
    throw std::invalid_argument("series must be a single letter A-G, got '" + s + "'");
  return s[0];
}

int min_rank_of(char series) {
  switch (series) {
    case 'A': return 1;
    case 'B': return 2;
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return 6;
    case 'F': return 4;
    case 'G': return 2;
  }
  return 1;
}

int max_rank_of(char series, int cap) {
  switch (series) {
    case 'E': return std::min(cap, 8);
    case 'F': return std::min(cap, 4);
    case 'G': return std::min(cap, 2);
    default: return cap;
  }
}

// All cominuscule flags in a rank window, canonical (series, rank, node) order.
std::vector<FlagInvariants> collect_flags(const std::string& series_filter,
                                          int min_rank, int max_rank) {
  std::vector<FlagInvariants> rows;
  const std::string all = "ABCDEFG";
  for (char series : all) {
    if (!series_filter.empty() && series != series_filter[0]) continue;
    const int lo = std::max(min_rank, min_rank_of(series));
    const int hi = max_rank_of(series, max_rank);
    for (int rank = lo; rank <= hi; ++rank) {
      RootSystem rs(CartanType{series, rank});
      for (int node : cominuscule_nodes(rs))
        rows.push_back(flag_invariants(rs, node));
    }
  }
  return rows;
}

int run_classify(const std::string& series, int min_rank, int max_rank,
                 const std::string& format, Output& output) {
  if (max_rank < 1) throw std::invalid_argument("--max-rank must be positive");
  auto rows = collect_flags(series, min_rank, max_rank);
  std::ostream& os = output.out();
  if (format == "json") {
    json arr = json::array();
    for (const auto& inv : rows) {
      json j;
      j["type"] = std::string(1, inv.type.series);
      j["rank"] = inv.type.rank;
      j["node"] = inv.node;
      j["M"] = inv.M;
      j["detA"] = inv.detA;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
  } else if (format == "csv") {
    os << classify_csv_header() << "\n";
    for (const auto& inv : rows) os << classify_csv_row(inv) << "\n";
  } else {
    os << std::left << std::setw(6) << "type" << std::setw(6) << "rank"
       << std::setw(6) << "node" << std::setw(6) << "M" << "detA\n";
    for (const auto& inv : rows)
      os << std::left << std::setw(6) << inv.type.name() << std::setw(6)
         << inv.type.rank << std::setw(6) << inv.node << std::setw(6) << inv.M
         << inv.detA << "\n";
  }
  return kExitOk;
}

int run_flag_report(char series, int rank, int node, const std::string& format,
                    Output& output) {
  RootSystem rs(CartanType{series, rank});
  FlagInvariants inv = flag_invariants(rs, node);
  std::ostream& os = output.out();
  if (format == "json") {
    json j;
    j["root_system"] = root_system_json(rs);
    j["invariants"] = flag_invariants_json(inv);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << invariants_csv_header() << "\n" << invariants_csv_row(inv) << "\n";
  } else {
    os << "flag " << inv.type.name() << " node " << node << "\n";
    os << "  M (complex dimension)  " << inv.M << "\n";
    os << "  det A                  " << inv.detA << "\n";
    os << "  d_s                    " << inv.d_s << "\n";
    os << "  N = dim V(fw_s)        " << inv.N << "\n";
    os << "  Z exponents a          ";
    for (std::size_t k = 0; k < inv.a.size(); ++k)
      os << (k ? " " : "") << inv.a[k];
    os << "\n";
    os << "  |J1|                   " << inv.j1_total << "\n";
    os << "  omega01 exponent       " << inv.omega01_exponent << "\n";
    os << "  form dims              ";
    for (std::size_t k = 0; k < inv.form_dims.size(); ++k)
      os << (k ? " " : "") << inv.form_dims[k].get_str();
    os << "\n";
    os << "  J1 weights (weight : mult)\n";
    for (const JEntry& e : inv.j1)
      os << "    " << to_string(e.weight) << " : " << e.mult.get_str() << "\n";
  }
  return kExitOk;
}

int run_verify_relations(char series, int rank, int node,
                         const std::string& format, Output& output) {
  RootSystem rs(CartanType{series, rank});
  MatrixRep rep = minuscule_rep(rs, node);
  RelationReport report = verify_relations(rep);
  std::ostream& os = output.out();
  if (format == "json") {
    json j = relation_report_json(report);
    j["type"] = std::string(1, series);
    j["rank"] = rank;
    j["node"] = node;
    j["dim"] = rep.dim;
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << relations_csv_header() << "\n";
    for (const FamilyResult& fam : report.families)
      os << relations_csv_row(rs.type(), node, fam) << "\n";
  } else {
    os << "minuscule module " << rs.type().name() << " node " << node
       << " (dim " << rep.dim << ")\n";
    for (const FamilyResult& fam : report.families) {
      os << "  " << std::left << std::setw(15) << fam.family
         << (fam.pass ? "PASS" : "FAIL");
      if (fam.witness)
        os << "  at (i=" << fam.witness->i << ", j=" << fam.witness->j
           << ", row=" << fam.witness->row << ", col=" << fam.witness->col
           << ") residual " << fam.witness->residual;
      os << "\n";
    }
  }
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int run_certify(char series, int rank, int node, long emin, long emax,
                const std::string& format, Output& output) {
  if (emin > emax) throw std::invalid_argument("--emin must be <= --emax");
  RootSystem rs(CartanType{series, rank});
  validate_flag(rs, node);
  bool all_pass = true;
  std::ostream& os = output.out();

  std::vector<std::pair<std::string, CertResult>> rows;  // (e field, cert)
  for (long e = emin; e <= emax; ++e) {
    rows.emplace_back(std::to_string(e), uniqueness_certificate(rs, node, e));
    rows.emplace_back(std::to_string(e),
                      uniqueness_certificate(rs, node, e, /*opposite=*/true));
    rows.emplace_back(std::to_string(e), flatness_certificate(rs, node, e));
  }
  rows.emplace_back("", torsion_certificate(rs, node));
  for (const auto& [e_field, cert] : rows) all_pass &= cert.pass;

  if (format == "json") {
    json arr = json::array();
    for (const auto& [e_field, cert] : rows) {
      json j = cert_result_json(cert);
      if (!e_field.empty()) j["e"] = std::stol(e_field);
      arr.push_back(std::move(j));
    }
    json top;
    top["type"] = std::string(1, series);
    top["rank"] = rank;
    top["node"] = node;
    top["certificates"] = std::move(arr);
    top["all_pass"] = all_pass;
    os << top.dump(2) << "\n";
  } else if (format == "csv") {
    os << certs_csv_header() << "\n";
    for (const auto& [e_field, cert] : rows)
      os << certs_csv_row(rs.type(), node, cert, e_field) << "\n";
  } else {
    os << "certificates for " << rs.type().name() << " node " << node
       << ", module exponents " << emin << ".." << emax << "\n";
    for (const auto& [e_field, cert] : rows) {
      os << "  " << std::left << std::setw(14) << cert_kind_name(cert.kind);
      if (!e_field.empty()) os << "e=" << std::setw(6) << e_field;
      else os << std::setw(8) << "";
      os << "lhs=" << std::setw(6) << cert.lhs_exponent
         << "rhs=" << std::setw(6) << cert.rhs_exponent
         << (cert.pass ? "PASS" : "FAIL") << "\n";
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_qtable(int max_n, int d, const std::string& format, Output& output) {
  if (max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
  if (d < 1) throw std::invalid_argument("--d must be positive");
  std::ostream& os = output.out();
  if (format == "json") {
    json arr = json::array();
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= n; ++k) {
        json j;
        j["n"] = n;
        j["k"] = k;
        j["d"] = d;
        j["value"] = qbinom(n, k, d).str();
        arr.push_back(std::move(j));
      }
    os << arr.dump(2) << "\n";
  } else if (format == "csv") {
    os << "n,k,d,value\n";
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= n; ++k)
        os << n << "," << k << "," << d << "," << qbinom(n, k, d).str() << "\n";
  } else {
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= n; ++k)
        os << "[" << n << " " << k << "]_" << d << " = " << qbinom(n, k, d).str()
           << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie-theoretic invariants of irreducible quantum flag manifolds"};
  app.require_subcommand(1);

  std::string series, format = "text", out_path;
  int rank = 0, node = 0, min_rank = 1, max_rank = 8;
  long emin = -100, emax = 100;
  int max_n = 8, qd = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--output", out_path, "output path (default: stdout)");
  };
  auto add_flag_selector = [&](CLI::App* cmd) {
    cmd->add_option("--series", series, "series letter A-G")->required();
    cmd->add_option("--rank", rank, "rank of the series")->required();
    cmd->add_option("--node", node, "crossed node (Bourbaki numbering)")->required();
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "list cominuscule flags in a rank range with M and det A");
  classify->add_option("--series", series, "restrict to one series letter A-G");
  classify->add_option("--min-rank", min_rank, "smallest rank (default 1)");
  classify->add_option("--max-rank", max_rank, "largest rank (default 8)");
  add_format(classify);

  CLI::App* flag_report = app.add_subcommand(
      "flag-report", "invariants of one irreducible quantum flag manifold");
  add_flag_selector(flag_report);
  add_format(flag_report);

  CLI::App* verify = app.add_subcommand(
      "verify-relations",
      "build the minuscule module at a node and verify all defining relations");
  add_flag_selector(verify);
  add_format(verify);

  CLI::App* certify = app.add_subcommand(
      "certify", "uniqueness/flatness/torsion certificates over a module-exponent range");
  add_flag_selector(certify);
  certify->add_option("--emin", emin, "smallest module exponent (default -100)");
  certify->add_option("--emax", emax, "largest module exponent (default 100)");
  add_format(certify);

  CLI::App* qtable = app.add_subcommand("qtable", "print balanced q-binomial tables");
  qtable->add_option("--max-n", max_n, "largest upper index (default 8)");
  qtable->add_option("--d", qd, "exponent multiplier d in q^d (default 1)");
  add_format(qtable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output output;
    output.open(out_path);
    if (app.got_subcommand(classify)) {
      if (!series.empty()) parse_series(series);
      return run_classify(series, min_rank, max_rank, format, output);
    }
    if (app.got_subcommand(qtable)) return run_qtable(max_n, qd, format, output);
    const char s = parse_series(series);
    if (app.got_subcommand(flag_report))
      return run_flag_report(s, rank, node, format, output);
    if (app.got_subcommand(verify))
      return run_verify_relations(s, rank, node, format, output);
    if (app.got_subcommand(certify))
      return run_certify(s, rank, node, emin, emax, format, output);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
