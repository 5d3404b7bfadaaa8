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
#include <vector>

namespace unpred {

/// Independent trials over a finite alphabet.
struct BernoulliSpec
{
  Alphabet            alphabet = Alphabet::binary();
  std::vector<double> probabilities{0.5, 0.5};
  std::uint64_t       seed{0};
  std::size_t         length{1};

  /// Fair coin over {0, 1}.
  static BernoulliSpec fair(std::uint64_t seed, std::size_t length);
};

/// Throws DomainError unless every probability is in [0, 1], there is one
/// per symbol, and they sum to 1 within 1e-12.
void validate(BernoulliSpec const &spec);

/**
 * One realization of the process, starting at index 0.
 *
 * Generator identity (fixed, part of the output contract): std::mt19937_64
 * seeded with `seed`; each trial draws one 64-bit word w, forms
 * u = (w >> 11) * 2^-53 in [0, 1), and selects the first symbol whose
 * cumulative probability exceeds u. Symbols with probability 0 are never
 * selected.
 */
SequenceWindow realize(BernoulliSpec const &spec);

}  // namespace unpred
