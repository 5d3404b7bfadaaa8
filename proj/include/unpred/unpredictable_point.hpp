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

#include <cstdint>
#include <string>
#include <vector>

namespace unpred {

inline constexpr int         kMaxFamilyLevel = 24;
inline constexpr std::size_t kMaxPointWindow = std::size_t{1} << 20;

/**
 * All 2^r binary strings of length r, in the order produced by the
 * recursion
 *
 *   level 1:   "0", "1"
 *   level r+1: string 2k-1 = (string k) + '0', string 2k = (string k) + '1'
 *
 * Strings are stored as r-bit codes, most significant bit first, so string k
 * (1-based) has code k - 1.
 */
class StringFamily
{
public:
  StringFamily(int level, std::vector<std::uint32_t> codes);

  int level() const noexcept
  {
    return level_;
  }

  std::size_t size() const noexcept
  {
    return codes_.size();
  }

  /// Code of string k, 1-based as in i^r_k.
  std::uint32_t code(std::size_t k) const;

  /// String k, 1-based, as '0'/'1' characters.
  std::string string(std::size_t k) const;

  /// Character c (0-based) of string k.
  Symbol symbol(std::size_t k, int c) const;

  std::vector<std::string> strings() const;

private:
  int                        level_;
  std::vector<std::uint32_t> codes_;
};

/// Builds level r by applying the append-0/append-1 recursion from level 1.
/// Throws DomainError for r < 1 and ResourceError for r > max_level.
StringFamily family(int level, int max_level = kMaxFamilyLevel);

/**
 * Symbol (0 or 1) of the unpredictable point at index n.
 *
 * Index 0 onward reads the odd-position strings level by level:
 *   i^1_1 | i^2_1 i^2_3 | i^3_1 i^3_3 i^3_5 i^3_7 | ...
 * Index -1 backward holds the even-position strings from level 2, each block
 * in normal reading order with its last character nearest the point:
 *   ... i^3_4 i^3_2 | i^2_4 i^2_2 .
 */
Symbol point_symbol(Index n);

/// Window of the unpredictable point, symbols mapped onto `alphabet`
/// (binary {0, 1} by default; symbol 0 -> a_1, symbol 1 -> a_2).
SequenceWindow point_window(Index first_index, std::size_t length,
                            std::size_t max_length = kMaxPointWindow);
SequenceWindow point_window(Index first_index, std::size_t length, Alphabet const &alphabet,
                            std::size_t max_length = kMaxPointWindow);

}  // namespace unpred
