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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace unpred {

using Index  = std::int64_t;
using Symbol = std::uint32_t;  // position in the alphabet, 0-based

/**
 * Finite set of distinct real symbol values a_1, ..., a_m (m >= 2).
 *
 * The order of the values is significant: symbols are stored as indices into
 * this list, and the sequence file format writes those indices.
 */
class Alphabet
{
public:
  explicit Alphabet(std::vector<double> values);

  /// The binary alphabet {0, 1}.
  static Alphabet binary();

  std::size_t size() const noexcept
  {
    return values_.size();
  }

  double value(Symbol s) const;

  std::span<double const> values() const noexcept
  {
    return values_;
  }

  /// max |a_i - a_j|
  double diameter() const noexcept
  {
    return diameter_;
  }

  /// min |a_i - a_j| over distinct pairs. For {a, b} this is |a - b|.
  double epsilon0() const noexcept
  {
    return epsilon0_;
  }

  /// max |a_i|
  double max_abs() const noexcept;

  std::optional<Symbol> symbol_of(double value) const noexcept;

  bool operator==(Alphabet const &other) const noexcept
  {
    return values_ == other.values_;
  }

private:
  std::vector<double> values_;
  double              diameter_{0.0};
  double              epsilon0_{0.0};
};

/**
 * A finite contiguous slice of a bi-infinite symbol sequence. Position j of
 * the stored symbols holds the entry at index first_index + j.
 */
class SequenceWindow
{
public:
  SequenceWindow(Alphabet alphabet, Index first_index, std::vector<Symbol> symbols);

  Alphabet const &alphabet() const noexcept
  {
    return alphabet_;
  }

  Index first_index() const noexcept
  {
    return first_index_;
  }

  Index last_index() const noexcept
  {
    return first_index_ + static_cast<Index>(symbols_.size()) - 1;
  }

  std::size_t length() const noexcept
  {
    return symbols_.size();
  }

  std::span<Symbol const> symbols() const noexcept
  {
    return symbols_;
  }

  bool covers(Index lo, Index hi) const noexcept
  {
    return lo >= first_index_ && hi <= last_index();
  }

  bool contains(Index k) const noexcept
  {
    return covers(k, k);
  }

  /// Symbol at sequence index k. Throws CoverageError outside the window.
  Symbol symbol_at(Index k) const;

  /// Real value at sequence index k.
  double value_at(Index k) const
  {
    return alphabet_.value(symbol_at(k));
  }

  /// Values of the whole window, in storage order.
  std::vector<double> values() const;

  bool operator==(SequenceWindow const &other) const noexcept
  {
    return first_index_ == other.first_index_ && symbols_ == other.symbols_ &&
           alphabet_ == other.alphabet_;
  }

private:
  Alphabet            alphabet_;
  Index               first_index_;
  std::vector<Symbol> symbols_;
};

/// Truncated metric value together with a bound on everything past the
/// truncation. The exact distance lies in [value, value + tail_bound].
struct MetricValue
{
  double value{0.0};
  double tail_bound{0.0};
};

/// Default truncation half-width for metric evaluation.
inline constexpr Index kDefaultHalfWidth = 32;

/**
 * d_K(I, J) = sum_{|k| <= K} |i_k - j_k| / 2^|k|, with
 * tail_bound = diameter * 2^(1 - K).
 *
 * Throws CoverageError if either window misses [-K, K] and DomainError if the
 * alphabets differ.
 */
MetricValue metric_distance(SequenceWindow const &lhs, SequenceWindow const &rhs,
                            Index half_width = kDefaultHalfWidth);

/// Bernoulli shift: the entry formerly at index k moves to index k - 1.
SequenceWindow shift(SequenceWindow const &window);

/// n-fold shift. n may be negative (inverse shift).
SequenceWindow shift(SequenceWindow const &window, Index times);

}  // namespace unpred
