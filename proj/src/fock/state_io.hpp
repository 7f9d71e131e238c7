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

#ifndef CVFORGE_FOCK_STATE_IO_HPP_
#define CVFORGE_FOCK_STATE_IO_HPP_

#include <string>
#include <variant>

#include "fock/types.hpp"
#include "fock/wigner.hpp"

namespace cvforge::fock {

// {"version":1,"dim":N,"re":[...],"im":[...]}: nested arrays for a density
// matrix, flat arrays for a ket.
std::string state_to_json(const DensityOp &rho);
std::string state_to_json(const FockKet &ket);

using StateDocument = std::variant<FockKet, DensityOp>;

// Throws ErrorCode::io with line/column on malformed JSON and
// ErrorCode::config on schema violations.
StateDocument state_from_json(const std::string &text);
DensityOp as_density(const StateDocument &doc);

std::string wigner_to_csv(const WignerGrid &grid);

}  // namespace cvforge::fock

#endif  // CVFORGE_FOCK_STATE_IO_HPP_
