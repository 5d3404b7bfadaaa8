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

#include "unpred/timeseries_csv.hpp"

#include "unpred/errors.hpp"
#include "unpred/sequence_io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>

namespace unpred {

std::string format_csv(Trajectory const &trajectory, int digits)
{
  if (digits < 1 || digits > 17)
  {
    throw DomainError("csv: digits must lie in 1..17");
  }
  if (trajectory.times.size() != trajectory.values.size())
  {
    throw DomainError("csv: times and values differ in length");
  }

  std::string out = "t,value\n";
  out.reserve(out.size() + trajectory.size() * 48);
  char row[96];
  for (std::size_t i = 0; i < trajectory.size(); ++i)
  {
    int const n = std::snprintf(row, sizeof(row), "%.*g,%.*g\n", digits, trajectory.times[i],
                                digits, trajectory.values[i]);
    out.append(row, static_cast<std::size_t>(n));
  }
  return out;
}

Trajectory parse_csv(std::string_view text)
{
  auto const header_end = text.find('\n');
  auto       header     = text.substr(0, header_end);
  if (!header.empty() && header.back() == '\r')
  {
    header.remove_suffix(1);
  }
  if (header != "t,value")
  {
    throw FormatError("csv: expected header 't,value'");
  }

  Trajectory out;
  std::size_t line_no = 1;
  text.remove_prefix(header_end == std::string_view::npos ? text.size() : header_end + 1);
  while (!text.empty())
  {
    ++line_no;
    auto const end  = text.find('\n');
    auto       line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    if (!line.empty() && line.back() == '\r')
    {
      line.remove_suffix(1);
    }
    if (line.empty())
    {
      continue;
    }
    auto const comma = line.find(',');
    if (comma == std::string_view::npos)
    {
      throw FormatError("csv: line " + std::to_string(line_no) + " has no comma");
    }
    out.times.push_back(parse_double(line.substr(0, comma)));
    out.values.push_back(parse_double(line.substr(comma + 1)));
  }
  return out;
}

void write_csv_file(std::filesystem::path const &path, Trajectory const &trajectory, int digits)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  out << format_csv(trajectory, digits);
  if (!out)
  {
    throw Error("failed writing '" + path.string() + "'");
  }
}

Trajectory read_csv_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw Error("cannot open '" + path.string() + "'");
  }
  std::string const text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_csv(text);
}

}  // namespace unpred
