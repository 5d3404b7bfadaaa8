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

#include "unpred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace unpred {

Alphabet::Alphabet(std::vector<double> values)
  : values_(std::move(values))
{
  if (values_.size() < 2)
  {
    throw DomainError("alphabet needs at least 2 values");
  }

  diameter_ = 0.0;
  epsilon0_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values_.size(); ++i)
  {
    if (!std::isfinite(values_[i]))
    {
      throw DomainError("alphabet values must be finite");
    }
    for (std::size_t j = i + 1; j < values_.size(); ++j)
    {
      double const gap = std::abs(values_[i] - values_[j]);
      if (gap == 0.0)
      {
        throw DomainError("alphabet values must be distinct");
      }
      diameter_ = std::max(diameter_, gap);
      epsilon0_ = std::min(epsilon0_, gap);
    }
  }
}

Alphabet Alphabet::binary()
{
  return Alphabet({0.0, 1.0});
}

double Alphabet::value(Symbol s) const
{
  if (s >= values_.size())
  {
    throw DomainError("symbol " + std::to_string(s) + " is not in the alphabet");
  }
  return values_[s];
}

double Alphabet::max_abs() const noexcept
{
  double m = 0.0;
  for (double v : values_)
  {
    m = std::max(m, std::abs(v));
  }
  return m;
}

std::optional<Symbol> Alphabet::symbol_of(double value) const noexcept
{
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end())
  {
    return std::nullopt;
  }
  return static_cast<Symbol>(it - values_.begin());
}

SequenceWindow::SequenceWindow(Alphabet alphabet, Index first_index, std::vector<Symbol> symbols)
  : alphabet_(std::move(alphabet))
  , first_index_(first_index)
  , symbols_(std::move(symbols))
{
  if (symbols_.empty())
  {
    throw DomainError("sequence window must hold at least one symbol");
  }
  for (Symbol s : symbols_)
  {
    if (s >= alphabet_.size())
    {
      throw DomainError("symbol " + std::to_string(s) + " is not in the alphabet");
    }
  }
}

Symbol SequenceWindow::symbol_at(Index k) const
{
  if (!contains(k))
  {
    throw CoverageError("index " + std::to_string(k) + " outside window [" +
                        std::to_string(first_index_) + ", " + std::to_string(last_index()) + "]");
  }
  return symbols_[static_cast<std::size_t>(k - first_index_)];
}

std::vector<double> SequenceWindow::values() const
{
  std::vector<double> out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_)
  {
    out.push_back(alphabet_.value(s));
  }
  return out;
}

MetricValue metric_distance(SequenceWindow const &lhs, SequenceWindow const &rhs, Index half_width)
{
  if (half_width < 1)
  {
    throw DomainError("half-width must be positive");
  }
  if (!(lhs.alphabet() == rhs.alphabet()))
  {
    throw DomainError("metric_distance: windows use different alphabets");
  }
  if (!lhs.covers(-half_width, half_width) || !rhs.covers(-half_width, half_width))
  {
    throw CoverageError("metric_distance: windows must cover [-" + std::to_string(half_width) +
                        ", " + std::to_string(half_width) + "]");
  }

  // Sum from the outside in so the small terms accumulate first.
  double sum = 0.0;
  for (Index a = half_width; a >= 0; --a)
  {
    double const weight = std::ldexp(1.0, -static_cast<int>(std::min<Index>(a, 2000)));
    double       term   = std::abs(lhs.value_at(a) - rhs.value_at(a));
    if (a != 0)
    {
      term += std::abs(lhs.value_at(-a) - rhs.value_at(-a));
    }
    sum += term * weight;
  }

  double const tail =
      lhs.alphabet().diameter() * std::ldexp(1.0, static_cast<int>(1 - std::min<Index>(half_width, 2000)));
  return {sum, tail};
}

SequenceWindow shift(SequenceWindow const &window)
{
  if (window.length() < 2)
  {
    throw DomainError("shift needs a window of length >= 2");
  }
  return shift(window, 1);
}

SequenceWindow shift(SequenceWindow const &window, Index times)
{
  std::vector<Symbol> copy(window.symbols().begin(), window.symbols().end());
  return SequenceWindow(window.alphabet(), window.first_index() - times, std::move(copy));
}

}  // namespace unpred
