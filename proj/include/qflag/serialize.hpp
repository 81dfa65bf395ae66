#pragma once

#include <string>

#include "json.hpp"
#include "qflag/flagatlas.hpp"
#include "qflag/qmodule.hpp"
#include "qflag/rootdata.hpp"
#include "qflag/weights.hpp"

namespace qflag {

// Canonical JSON forms; see README for the schemas. All emitters are pure
// and produce identical bytes for identical inputs.

nlohmann::json root_system_json(const RootSystem& rs);
nlohmann::json weight_diagram_json(const WeightDiagram& wd);
nlohmann::json matrix_rep_json(const MatrixRep& rep);
nlohmann::json relation_report_json(const RelationReport& report);
nlohmann::json flag_invariants_json(const FlagInvariants& inv);
nlohmann::json cert_result_json(const CertResult& cert);

// Diff-friendly CSV: documented header rows, no quoting.

std::string classify_csv_header();
std::string classify_csv_row(const FlagInvariants& inv);

std::string invariants_csv_header();
std::string invariants_csv_row(const FlagInvariants& inv);

std::string relations_csv_header();
std::string relations_csv_row(const CartanType& type, int node,
                              const FamilyResult& fam);

std::string certs_csv_header();
std::string certs_csv_row(const CartanType& type, int node,
                          const CertResult& cert, const std::string& e_field);

}  // namespace qflag
