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

#include "unpred/unpredictable_point.hpp"

#include "unpred/errors.hpp"

#include <limits>

namespace unpred {

StringFamily::StringFamily(int level, std::vector<std::uint32_t> codes)
  : level_(level)
  , codes_(std::move(codes))
{}

std::uint32_t StringFamily::code(std::size_t k) const
{
  if (k < 1 || k > codes_.size())
  {
    throw DomainError("string position " + std::to_string(k) + " outside 1.." +
                      std::to_string(codes_.size()));
  }
  return codes_[k - 1];
}

Symbol StringFamily::symbol(std::size_t k, int c) const
{
  if (c < 0 || c >= level_)
  {
    throw DomainError("character position out of range");
  }
  return (code(k) >> (level_ - 1 - c)) & 1u;
}

std::string StringFamily::string(std::size_t k) const
{
  std::string out(static_cast<std::size_t>(level_), '0');
  for (int c = 0; c < level_; ++c)
  {
    out[static_cast<std::size_t>(c)] = symbol(k, c) != 0 ? '1' : '0';
  }
  return out;
}

std::vector<std::string> StringFamily::strings() const
{
  std::vector<std::string> out;
  out.reserve(codes_.size());
  for (std::size_t k = 1; k <= codes_.size(); ++k)
  {
    out.push_back(string(k));
  }
  return out;
}

StringFamily family(int level, int max_level)
{
  if (level < 1)
  {
    throw DomainError("family level must be >= 1");
  }
  if (level > max_level || level > 31)
  {
    throw ResourceError("family level " + std::to_string(level) + " exceeds maximum " +
                        std::to_string(max_level));
  }

  std::vector<std::uint32_t> codes{0u, 1u};
  for (int r = 1; r < level; ++r)
  {
    std::vector<std::uint32_t> next(codes.size() * 2);
    for (std::size_t k = 0; k < codes.size(); ++k)
    {
      next[2 * k]     = codes[k] << 1;         // append '0'
      next[2 * k + 1] = (codes[k] << 1) | 1u;  // append '1'
    }
    codes = std::move(next);
  }
  return StringFamily(level, std::move(codes));
}

namespace {

// Locates distance d (0-based, counted away from the point) inside the side
// whose first level is `first_level`. Returns the level, the 0-based block
// within the level, and the offset inside the block.
struct BlockPosition
{
  int           level;
  std::uint64_t block;
  int           offset;
};

BlockPosition locate(std::uint64_t d, int first_level)
{
  for (int r = first_level;; ++r)
  {
    std::uint64_t const size = static_cast<std::uint64_t>(r) << (r - 1);
    if (d < size)
    {
      return {r, d / static_cast<std::uint64_t>(r), static_cast<int>(d % static_cast<std::uint64_t>(r))};
    }
    d -= size;
  }
}

}  // namespace

Symbol point_symbol(Index n)
{
  if (n >= 0)
  {
    // Block j of level r is i^r_{2j+1}, whose code is 2j.
    auto const pos  = locate(static_cast<std::uint64_t>(n), 1);
    auto const code = pos.block << 1;
    return static_cast<Symbol>((code >> (pos.level - 1 - pos.offset)) & 1u);
  }

  // Block j of level r is i^r_{2j+2}, whose code is 2j + 1. Offset counts
  // from the character nearest the point, which is the block's last one, so
  // it is also the bit position counted from the least significant end.
  auto const d    = static_cast<std::uint64_t>(-(n + 1));
  auto const pos  = locate(d, 2);
  auto const code = (pos.block << 1) | 1u;
  return static_cast<Symbol>((code >> pos.offset) & 1u);
}

SequenceWindow point_window(Index first_index, std::size_t length, std::size_t max_length)
{
  return point_window(first_index, length, Alphabet::binary(), max_length);
}

SequenceWindow point_window(Index first_index, std::size_t length, Alphabet const &alphabet,
                            std::size_t max_length)
{
  if (length < 1)
  {
    throw DomainError("point window length must be >= 1");
  }
  if (length > max_length)
  {
    throw ResourceError("point window length " + std::to_string(length) + " exceeds maximum " +
                        std::to_string(max_length));
  }
  if (alphabet.size() != 2)
  {
    throw DomainError("the unpredictable point is binary; alphabet must have exactly 2 values");
  }
  if (first_index > std::numeric_limits<Index>::max() - static_cast<Index>(length))
  {
    throw DomainError("point window index range overflows");
  }

  std::vector<Symbol> symbols(length);
  for (std::size_t j = 0; j < length; ++j)
  {
    symbols[j] = point_symbol(first_index + static_cast<Index>(j));
  }
  return SequenceWindow(alphabet, first_index, std::move(symbols));
}

}  // namespace unpred
