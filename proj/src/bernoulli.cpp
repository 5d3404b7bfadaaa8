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

#include "unpred/bernoulli.hpp"

#include "unpred/errors.hpp"

#include <cmath>
#include <random>

namespace unpred {

BernoulliSpec BernoulliSpec::fair(std::uint64_t seed, std::size_t length)
{
  BernoulliSpec spec;
  spec.seed   = seed;
  spec.length = length;
  return spec;
}

void validate(BernoulliSpec const &spec)
{
  if (spec.length == 0)
  {
    throw DomainError("bernoulli: length must be positive");
  }
  if (spec.probabilities.size() != spec.alphabet.size())
  {
    throw DomainError("bernoulli: need one probability per alphabet symbol (" +
                      std::to_string(spec.alphabet.size()) + "), got " +
                      std::to_string(spec.probabilities.size()));
  }
  double sum = 0.0;
  for (double p : spec.probabilities)
  {
    if (!(p >= 0.0 && p <= 1.0))
    {
      throw DomainError("bernoulli: probabilities must lie in [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
  {
    throw DomainError("bernoulli: probabilities must sum to 1");
  }
}

SequenceWindow realize(BernoulliSpec const &spec)
{
  validate(spec);

  auto const          m = spec.probabilities.size();
  std::vector<double> cumulative(m);
  double              running = 0.0;
  Symbol              last_positive{0};
  for (std::size_t i = 0; i < m; ++i)
  {
    running += spec.probabilities[i];
    cumulative[i] = running;
    if (spec.probabilities[i] > 0.0)
    {
      last_positive = static_cast<Symbol>(i);
    }
  }

  std::mt19937_64     engine(spec.seed);
  std::vector<Symbol> symbols(spec.length);
  for (auto &s : symbols)
  {
    double const u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    s              = last_positive;
    for (std::size_t i = 0; i < m; ++i)
    {
      if (u < cumulative[i] && spec.probabilities[i] > 0.0)
      {
        s = static_cast<Symbol>(i);
        break;
      }
    }
  }
  return SequenceWindow(spec.alphabet, 0, std::move(symbols));
}

}  // namespace unpred
