#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The unpred Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "unpred/verifier.hpp"

#include <json.hpp>

#include <optional>

namespace unpred {

using Json = nlohmann::ordered_json;

// Reports keep a fixed key order: verdict, epsilon0_requested,
// epsilon0_achieved, witnesses, data_coverage, parameters, then any extras.

Json sequence_report(SequenceVerdict const &verdict, SequenceSearch const &search);

/// Expected separation level to compare the achieved value against.
struct SeparationPrediction
{
  double lower_bound{0.0};
  double kappa_i{0.0};
  double kappa_ii{0.0};
};

Json function_report(FunctionVerdict const &verdict, FunctionSearch const &search,
                     std::vector<double> const                 &shift_candidates,
                     std::optional<SeparationPrediction> const &prediction = std::nullopt);

/// Serialized with 2-space indent and a trailing newline.
std::string dump_report(Json const &report);

}  // namespace unpred
