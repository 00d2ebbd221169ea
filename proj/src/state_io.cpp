// Copyright 2026 The ghzlab Authors
//
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


#include "ghzlab/state_io.hpp"

#include <fstream>

#include "ghzlab/errors.hpp"

namespace ghzlab {
namespace {

using nlohmann::json;

double number_at(const json& arr, std::size_t i, const char* field) {
  if (!arr.is_array() || i >= arr.size() || !arr[i].is_number()) {
    throw InputError(std::string("state field '") + field + "' must hold numbers");
  }
  return arr[i].get<double>();
}

}  // namespace

State state_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("state document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() != kDim) {
    throw InputError("state document must declare \"dim\": 8");
  }
  if (!doc.contains("re") || !doc.contains("im")) {
    throw InputError("state document needs \"re\" and \"im\" arrays");
  }
  const json& re = doc["re"];
  const json& im = doc["im"];
  if (!re.is_array() || !im.is_array() || re.size() != kDim || im.size() != kDim) {
    throw InputError("\"re\" and \"im\" must each have 8 entries");
  }
  if (re[0].is_array()) {
    Matrix8 m;
    for (int r = 0; r < kDim; ++r) {
      if (!re[r].is_array() || !im[r].is_array() || re[r].size() != kDim || im[r].size() != kDim) {
        throw InputError("density matrix rows must have 8 entries");
      }
      for (int c = 0; c < kDim; ++c) {
        m(r, c) = Complex(number_at(re[r], c, "re"), number_at(im[r], c, "im"));
      }
    }
    return DensityMatrix(m);
  }
  Vector8 v;
  for (int i = 0; i < kDim; ++i) {
    v(i) = Complex(number_at(re, i, "re"), number_at(im, i, "im"));
  }
  return StateVector(v);
}

json state_to_json(const State& state) {
  json doc;
  doc["dim"] = kDim;
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < kDim; ++i) {
      re.push_back((*psi)[i].real());
      im.push_back((*psi)[i].imag());
    }
    doc["re"] = re;
    doc["im"] = im;
    return doc;
  }
  const Matrix8& m = std::get<DensityMatrix>(state).matrix();
  json re = json::array(), im = json::array();
  for (int r = 0; r < kDim; ++r) {
    json rr = json::array(), ir = json::array();
    for (int c = 0; c < kDim; ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  doc["re"] = re;
  doc["im"] = im;
  return doc;
}

State load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open state file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InputError("state file " + path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

void save_state(const std::filesystem::path& path, const State& state) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write state file " + path.string());
  out << state_to_json(state).dump(2) << '\n';
}

}  // namespace ghzlab
