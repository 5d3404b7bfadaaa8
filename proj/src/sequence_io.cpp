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

#include "unpred/sequence_io.hpp"

#include "unpred/errors.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace unpred {
namespace {

constexpr std::string_view kAlphabetKey   = "alphabet: ";
constexpr std::string_view kFirstIndexKey = "first_index: ";

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
  {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
  {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T parse_integer(std::string_view text, char const *what)
{
  text = trim(text);
  T value{};
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
  {
    throw FormatError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
  std::vector<std::string_view> out;
  std::size_t                   start = 0;
  while (true)
  {
    auto const pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                   : pos - start));
    if (pos == std::string_view::npos)
    {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::string_view next_line(std::string_view &text)
{
  auto const      pos  = text.find('\n');
  std::string_view line = text.substr(0, pos);
  text.remove_prefix(pos == std::string_view::npos ? text.size() : pos + 1);
  if (!line.empty() && line.back() == '\r')
  {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace

std::string format_double(double value)
{
  char buf[64];
  auto const [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{})
  {
    throw FormatError("cannot format double");
  }
  return std::string(buf, ptr);
}

double parse_double(std::string_view text)
{
  text = trim(text);
  double value{};
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
  {
    throw FormatError("invalid number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_double_list(std::string_view text)
{
  std::vector<double> out;
  for (auto part : split(text, ','))
  {
    out.push_back(parse_double(part));
  }
  return out;
}

std::string format_sequence(SequenceWindow const &window)
{
  std::string out(kAlphabetKey);
  auto const  values = window.alphabet().values();
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    if (i != 0)
    {
      out += ',';
    }
    out += format_double(values[i]);
  }
  out += '\n';
  out += kFirstIndexKey;
  out += std::to_string(window.first_index());
  out += '\n';

  auto const symbols = window.symbols();
  out.reserve(out.size() + 2 * symbols.size() + 1);
  for (std::size_t i = 0; i < symbols.size(); ++i)
  {
    if (i != 0)
    {
      out += ',';
    }
    out += std::to_string(symbols[i]);
  }
  out += '\n';
  return out;
}

SequenceWindow parse_sequence(std::string_view text)
{
  std::string_view rest = text;

  auto const alphabet_line = next_line(rest);
  if (alphabet_line.substr(0, kAlphabetKey.size()) != kAlphabetKey)
  {
    throw FormatError("sequence file: line 1 must start with 'alphabet: '");
  }
  std::vector<double> values;
  try
  {
    values = parse_double_list(alphabet_line.substr(kAlphabetKey.size()));
  }
  catch (FormatError const &e)
  {
    throw FormatError(std::string("sequence file: alphabet: ") + e.what());
  }

  auto const index_line = next_line(rest);
  if (index_line.substr(0, kFirstIndexKey.size()) != kFirstIndexKey)
  {
    throw FormatError("sequence file: line 2 must start with 'first_index: '");
  }
  auto const first = parse_integer<Index>(index_line.substr(kFirstIndexKey.size()), "first_index");

  auto const symbol_line = trim(next_line(rest));
  if (symbol_line.empty())
  {
    throw FormatError("sequence file: line 3 (symbols) is empty");
  }
  if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos)
  {
    throw FormatError("sequence file: unexpected content after line 3");
  }

  std::vector<Symbol> symbols;
  symbols.reserve(symbol_line.size() / 2 + 1);
  for (auto part : split(symbol_line, ','))
  {
    symbols.push_back(parse_integer<Symbol>(part, "symbol"));
  }
  return SequenceWindow(Alphabet(std::move(values)), first, std::move(symbols));
}

void write_sequence(std::ostream &out, SequenceWindow const &window)
{
  out << format_sequence(window);
}

SequenceWindow read_sequence(std::istream &in)
{
  std::string const text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_sequence(text);
}

void write_sequence_file(std::filesystem::path const &path, SequenceWindow const &window)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  write_sequence(out, window);
  if (!out)
  {
    throw Error("failed writing '" + path.string() + "'");
  }
}

SequenceWindow read_sequence_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw Error("cannot open '" + path.string() + "'");
  }
  return read_sequence(in);
}

}  // namespace unpred
