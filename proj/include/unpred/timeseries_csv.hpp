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

#include "unpred/filter.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace unpred {

inline constexpr int kDefaultCsvDigits = 17;

// Header "t,value", then one "%.<digits>g,%.<digits>g" row per sample.
// With 17 digits every double survives a write/read cycle exactly.
std::string format_csv(Trajectory const &trajectory, int digits = kDefaultCsvDigits);
Trajectory parse_csv(std::string_view text);

void write_csv_file(std::filesystem::path const &path, Trajectory const &trajectory,
                    int digits = kDefaultCsvDigits);
Trajectory read_csv_file(std::filesystem::path const &path);

}  // namespace unpred
