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

#include "unpred/symbol_space.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace unpred {

// Sequence file format (UTF-8, '\n' line endings):
//
//   alphabet: 0,1
//   first_index: -8
//   0,1,1,0,...
//
// The third line lists symbol indices into the alphabet. Alphabet values are
// written in shortest round-trip form, so write(read(x)) == x byte for byte.

std::string format_sequence(SequenceWindow const &window);
SequenceWindow parse_sequence(std::string_view text);

void write_sequence(std::ostream &out, SequenceWindow const &window);
SequenceWindow read_sequence(std::istream &in);

void write_sequence_file(std::filesystem::path const &path, SequenceWindow const &window);
SequenceWindow read_sequence_file(std::filesystem::path const &path);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Strict parse of a full string as a double; throws FormatError.
double parse_double(std::string_view text);

/// Comma-separated list of doubles ("0,1" or "-1.5, 2").
std::vector<double> parse_double_list(std::string_view text);

}  // namespace unpred
