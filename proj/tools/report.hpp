#pragma once

#include <string>

#include <json.hpp>

#include "qd/braid.hpp"
#include "qd/shor.hpp"

namespace qdsim {

using nlohmann::ordered_json;

struct Table {
  std::string csv;
  ordered_json json;
};

Table group_table();
Table s_matrix_table();
Table t_matrix_table();
Table fusion_table();
Table braid_table(qd::TemplateVariant variant);

// Each suite carries "status": "pass" or "fail".
ordered_json verify_recoupling(unsigned threads);
ordered_json verify_braids(qd::TemplateVariant variant);
ordered_json verify_gates(qd::TemplateVariant variant);

ordered_json shor_json(const std::vector<qd::shor::EnsembleReport>& reports);

}  // namespace qdsim
