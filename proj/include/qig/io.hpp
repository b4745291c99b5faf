// Copyright 2026 The qig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qig/channel.hpp"
#include "qig/dilation.hpp"
#include "qig/info.hpp"
#include "qig/majorization.hpp"

namespace qig {

using nlohmann::json;

/// Shortest-width decimal rendering with full round-trip precision; used
/// for every CSV field so repeated runs are byte-identical.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace detail {

inline const json& require_field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw schema_error(where + ": missing field \"" + key + "\"");
  return *it;
}

inline complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw schema_error(where + ": expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline cmat parse_matrix(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw schema_error(where + ": expected " + std::to_string(dim) + " rows");
  cmat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw schema_error(where + ": row " + std::to_string(r) + ": expected " +
                         std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c)
      m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                              where + ": row " + std::to_string(r) + ", column " +
                                  std::to_string(c));
  }
  return m;
}

inline json matrix_to_json(const cmat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Parse an instance object, applying every type invariant. Errors name
/// the offending field or the violated invariant with its residual.
inline Instance parse_instance(const json& j) {
  if (!j.is_object()) throw schema_error("instance: expected a JSON object");
  const json& jdim = detail::require_field(j, "dim", "instance");
  if (!jdim.is_number_integer() || jdim.get<int>() < 1)
    throw schema_error("instance: \"dim\" must be a positive integer");
  const int dim = jdim.get<int>();

  const json& jens = detail::require_field(j, "ensemble", "instance");
  if (!jens.is_array() || jens.empty())
    throw schema_error("instance: \"ensemble\" must be a nonempty array");
  std::vector<double> probs;
  std::vector<DensityMatrix> states;
  for (std::size_t i = 0; i < jens.size(); ++i) {
    const std::string where = "ensemble[" + std::to_string(i) + "]";
    const json& entry = jens[i];
    if (!entry.is_object()) throw schema_error(where + ": expected an object");
    const json& jp = detail::require_field(entry, "p", where);
    if (!jp.is_number()) throw schema_error(where + ": \"p\" must be a number");
    probs.push_back(jp.get<double>());
    states.emplace_back(
        detail::parse_matrix(detail::require_field(entry, "state", where), dim,
                             where + ".state"));
  }

  const json& jmeas = detail::require_field(j, "measurement", "instance");
  const json& jgroups = detail::require_field(jmeas, "groups", "measurement");
  if (!jgroups.is_array() || jgroups.empty())
    throw schema_error("measurement: \"groups\" must be a nonempty array");
  std::vector<std::vector<cmat>> groups;
  for (std::size_t g = 0; g < jgroups.size(); ++g) {
    const std::string where = "measurement.groups[" + std::to_string(g) + "]";
    const json& jg = jgroups[g];
    if (!jg.is_array() || jg.empty())
      throw schema_error(where + ": expected a nonempty array of operators");
    std::vector<cmat> ops;
    for (std::size_t k = 0; k < jg.size(); ++k)
      ops.push_back(detail::parse_matrix(jg[k], dim,
                                         where + "[" + std::to_string(k) + "]"));
    groups.push_back(std::move(ops));
  }

  return Instance{Ensemble(ProbVector(std::move(probs)), std::move(states)),
                  GroupedMeasurement(dim, std::move(groups))};
}

inline json instance_to_json(const Instance& inst) {
  json jens = json::array();
  for (std::size_t i = 0; i < inst.ensemble.size(); ++i)
    jens.push_back({{"p", inst.ensemble.prob(i)},
                    {"state", detail::matrix_to_json(inst.ensemble.state(i).matrix())}});
  json jgroups = json::array();
  for (const auto& g : inst.measurement.groups()) {
    json jg = json::array();
    for (const auto& a : g) jg.push_back(detail::matrix_to_json(a));
    jgroups.push_back(std::move(jg));
  }
  return {{"dim", inst.ensemble.dim()},
          {"ensemble", std::move(jens)},
          {"measurement", {{"groups", std::move(jgroups)}}}};
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open \"" + path + "\" for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw schema_error(path + ": " + e.what());
  }
  return parse_instance(j);
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw io_error("write to \"" + path + "\" failed");
}

inline void save_instance(const Instance& inst, const std::string& path) {
  write_text_file(path, instance_to_json(inst).dump(2) + "\n");
}

inline json to_json(const BoundReport& r) {
  json j{{"mutual_info", r.mutual_info},
         {"chi", r.chi},
         {"chi_j", r.chi_j},
         {"sum_pj_chi_j", r.sum_pj_chi_j},
         {"avg_entropy_reduction", r.avg_entropy_reduction},
         {"per_state_entropy_reductions", r.per_state_entropy_reductions},
         {"gap_holevo", r.gap_holevo},
         {"gap_sww_theorem1", r.gap_sww_theorem1},
         {"gap_gen_hall", r.gap_gen_hall},
         {"gap_sww_fine", r.gap_sww_fine}};
  if (r.ozawa_nonneg.has_value()) j["ozawa_nonneg"] = *r.ozawa_nonneg;
  return j;
}

inline json to_json(const SchurProbeReport& r) {
  return {{"pairs_tested", r.pairs_tested},
          {"violations", r.violations},
          {"worst_violation", r.worst_violation},
          {"tolerance_used", r.tolerance_used},
          {"quantity", r.quantity == SchurQuantity::entropy_reduction
                           ? "entropy-reduction"
                           : "pure-ensemble-mutual-info"}};
}

inline json to_json(const TheoremOneCertificate& c) {
  return {{"chi_q", c.chi_q},
          {"chi_qm", c.chi_qm},
          {"mutual_info", c.mutual_info},
          {"sum_pj_chi_j", c.sum_pj_chi_j},
          {"identity_residual", c.identity_residual()},
          {"slack", c.slack()}};
}

inline constexpr const char* kBoundReportCsvHeader =
    "instance_id,dim,n_states,n_groups,efficient,M,chi,sum_pj_chi_j,dS,"
    "gap_holevo,gap_sww_theorem1,gap_gen_hall,gap_sww_fine";

inline std::string bound_report_csv_row(long instance_id, int dim, std::size_t n_states,
                                        std::size_t n_groups, bool efficient,
                                        const BoundReport& r) {
  std::ostringstream row;
  row << instance_id << ',' << dim << ',' << n_states << ',' << n_groups << ','
      << (efficient ? 1 : 0) << ',' << format_double(r.mutual_info) << ','
      << format_double(r.chi) << ',' << format_double(r.sum_pj_chi_j) << ','
      << format_double(r.avg_entropy_reduction) << ',' << format_double(r.gap_holevo)
      << ',' << format_double(r.gap_sww_theorem1) << ','
      << format_double(r.gap_gen_hall) << ',' << format_double(r.gap_sww_fine);
  return row.str();
}

}  // namespace qig
