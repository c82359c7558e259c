// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON views of verification and oracle reports. Rationals are canonical
// "p/q" strings throughout.

#ifndef FLAGCERT_JSON_REPORT_HPP_
#define FLAGCERT_JSON_REPORT_HPP_

#include <string>

#include "flagcert/certificate.hpp"
#include "flagcert/certificate_io.hpp"
#include "flagcert/oracle.hpp"

namespace flagcert {

inline Json rational_vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline Json density_json(const DensityVector& d) {
  Json out = Json::object();
  for (ClassIndex l = 1; l <= d.size(); ++l) out[std::to_string(l)] = d[l].to_string();
  return out;
}

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["name"] = r.name;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["bound"] = r.bound.to_string();
  Json cls = Json::array();
  for (const auto& c : r.classes) {
    cls.push_back({{"index", c.index}, {"aut_count", c.aut_count}, {"multiplicity", c.multiplicity}});
  }
  j["classification"] = {{"colorings", r.colorings}, {"classes", cls}};
  j["base"] = density_json(r.base);
  j["coefficients"] = density_json(r.coefficients);
  Json fams = Json::array();
  for (const auto& f : r.families) {
    Json kernel = Json::array();
    for (const auto& v : f.psd.kernel_basis) kernel.push_back(rational_vector_json(v));
    fams.push_back({{"root_edge_color", std::string(1, color_letter(f.root_edge_color))},
                    {"order", f.order},
                    {"is_psd", f.psd.is_psd},
                    {"pivots", rational_vector_json(f.psd.pivot_sequence)},
                    {"kernel_basis", std::move(kernel)}});
  }
  j["families"] = std::move(fams);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

inline Json oracle_record_json(const OracleRecord& r) {
  return {{"check", r.check}, {"instance", r.instance}, {"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()},
          {"holds", r.holds}};
}

inline Json oracle_report_to_json(const OracleReport& r) {
  Json j;
  j["verdict"] = r.ok() ? "pass" : "fail";
  j["instances"] = r.instances();
  j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}, {"total", r.total()}};
  Json tallies = Json::object();
  for (const auto& [name, t] : r.tallies()) tallies[name] = {{"passed", t.passed}, {"failed", t.failed}};
  j["tallies"] = std::move(tallies);
  Json records = Json::array();
  for (const auto& rec : r.records()) records.push_back(oracle_record_json(rec));
  j["records"] = std::move(records);
  return j;
}

inline Json monte_carlo_to_json(const MonteCarloResult& r) {
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(v.to_string());
  return {{"n", r.n},         {"trials", r.trials},           {"seed", r.seed},
          {"mean", r.mean.to_string()}, {"min", r.min.to_string()}, {"max", r.max.to_string()},
          {"values", std::move(values)}};
}

}  // namespace flagcert

#endif  // FLAGCERT_JSON_REPORT_HPP_
