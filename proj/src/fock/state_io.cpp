// Copyright 2026 The cvforge Authors
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

#include "fock/state_io.hpp"

#include "json.hpp"

#include "common/format.hpp"
#include "common/json_util.hpp"

namespace cvforge::fock {
namespace {

using nlohmann::json;

json real_rows(const CMatrix &m, bool imag) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

double number_at(const json &v, const std::string &where) {
  require(v.is_number(), ErrorCode::config, where + " must be a number");
  return v.get<double>();
}

}  // namespace

std::string state_to_json(const DensityOp &rho) {
  require(rho.modes() == 1, ErrorCode::dimension_mismatch, "only single-mode states serialize");
  json doc;
  doc["version"] = 1;
  doc["dim"] = rho.dim();
  doc["re"] = real_rows(rho.matrix(), false);
  doc["im"] = real_rows(rho.matrix(), true);
  return doc.dump() + "\n";
}

std::string state_to_json(const FockKet &ket) {
  json doc;
  doc["version"] = 1;
  doc["dim"] = ket.dim();
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < ket.amplitudes.size(); ++i) {
    re.push_back(ket.amplitudes(i).real());
    im.push_back(ket.amplitudes(i).imag());
  }
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump() + "\n";
}

StateDocument state_from_json(const std::string &text) {
  const json doc = parse_json_or_throw(text, "state");
  require(doc.is_object(), ErrorCode::config, "state document must be an object");
  for (const char *key : {"version", "dim", "re", "im"})
    require(doc.contains(key), ErrorCode::config, std::string("state document missing field '") + key + "'");
  require(doc["version"] == 1, ErrorCode::config, "unsupported state version");
  require(doc["dim"].is_number_integer(), ErrorCode::config, "field 'dim' must be an integer");
  const int dim = doc["dim"].get<int>();
  require(dim >= 1, ErrorCode::config, "field 'dim' must be positive");
  const json &re = doc["re"];
  const json &im = doc["im"];
  require(re.is_array() && im.is_array() && re.size() == std::size_t(dim) && im.size() == std::size_t(dim),
          ErrorCode::config, "fields 're' and 'im' must have 'dim' entries");
  if (!re.empty() && re[0].is_array()) {
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      require(re[i].is_array() && im[i].is_array() && re[i].size() == std::size_t(dim) &&
                  im[i].size() == std::size_t(dim),
              ErrorCode::config, "row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < dim; ++j)
        m(i, j) = Complex(number_at(re[i][j], "re"), number_at(im[i][j], "im"));
    }
    return DensityOp(dim, 1, std::move(m));
  }
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(number_at(re[i], "re"), number_at(im[i], "im"));
  return FockKet(std::move(v));
}

DensityOp as_density(const StateDocument &doc) {
  if (const auto *ket = std::get_if<FockKet>(&doc)) return DensityOp::from_ket(*ket);
  return std::get<DensityOp>(doc);
}

std::string wigner_to_csv(const WignerGrid &grid) {
  CsvWriter csv({"q", "p", "w"});
  for (std::size_t i = 0; i < grid.q_axis.size(); ++i)
    for (std::size_t j = 0; j < grid.p_axis.size(); ++j)
      csv.row({format_double(grid.q_axis[i]), format_double(grid.p_axis[j]),
               format_double(grid.values(Eigen::Index(i), Eigen::Index(j)))});
  return csv.str();
}

}  // namespace cvforge::fock
