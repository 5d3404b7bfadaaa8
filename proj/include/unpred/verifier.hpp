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

#include <functional>
#include <string_view>
#include <vector>

namespace unpred {

// Finite data can never prove unpredictability. A search either finds the
// requested number of witnesses (consistent), finds a shift that makes the
// data exactly periodic with no separation anywhere (inconsistent), or runs
// out of data (inconclusive).
enum class Verdict
{
  consistent,
  inconsistent,
  inconclusive,
};

std::string_view to_string(Verdict v) noexcept;

// ---------------------------------------------------------------- sequences

struct SequenceSearch
{
  Index       half_width{4};  // L: convergence is checked on [-L, L]
  double      tolerance{0.0};
  double      epsilon0{1.0};
  std::size_t count{3};
};

struct SequenceWitness
{
  Index  zeta{0};
  Index  eta{0};
  Index  window_lo{0};
  Index  window_hi{0};
  double max_window_error{0.0};  // max_{|k|<=L} |v_{k+zeta} - v_k|
  double separation{0.0};        // |v_{zeta+eta} - v_eta|
};

struct SequenceVerdict
{
  std::vector<SequenceWitness> witnesses;
  double                       epsilon0_achieved{0.0};  // min separation over witnesses
  Verdict                      verdict{Verdict::inconclusive};
  Index                        coverage_first{0};
  Index                        coverage_last{0};
  std::size_t                  shifts_scanned{0};
  std::size_t                  shifts_qualifying{0};
};

/**
 * Brute-force search for Definition-1 witnesses.
 *
 * Shifts zeta = 1, 2, ... are scanned in increasing order while [-L, L] + zeta
 * stays inside the window. A shift qualifies when the window error is within
 * tolerance; for each qualifying shift the smallest eta beyond the previous
 * witness's eta with |v_{zeta+eta} - v_eta| >= epsilon0 is taken. The search
 * stops after `count` witnesses.
 *
 * Throws CoverageError if the window misses [-L, L + 1].
 */
SequenceVerdict find_sequence_witnesses(SequenceWindow const &sequence,
                                        SequenceSearch const &search);

// ---------------------------------------------------------------- functions

/// Callable access to h on [t_min, t_max].
struct SampledFunction
{
  std::function<double(double)> h;
  double                        t_min{0.0};
  double                        t_max{0.0};
};

struct FunctionSearch
{
  double      alpha{0.0};  // compact [alpha, beta] for the convergence check
  double      beta{1.0};
  double      sigma{0.1};
  double      tolerance{1e-3};
  double      epsilon0{0.1};
  double      sample_dt{0.01};  // must be <= sigma / 8
  double      u_min{0.0};       // separation centers are scanned in [u_min, u_max]
  double      u_max{1.0};
  std::size_t count{1};
};

struct FunctionWitness
{
  double t_shift{0.0};
  double u_center{0.0};
  double sigma{0.0};
  double max_compact_error{0.0};
  double min_separation_on_interval{0.0};
};

/// Per-candidate summary, recorded whether or not the shift produced a witness.
struct ShiftDiagnostic
{
  double t_shift{0.0};
  double max_compact_error{0.0};
  bool   qualifies{false};
  double best_separation{0.0};  // max over centers of the min over [u - sigma, u + sigma]
  double best_center{0.0};
};

struct FunctionVerdict
{
  std::vector<FunctionWitness> witnesses;
  std::vector<ShiftDiagnostic> diagnostics;
  double                       epsilon0_achieved{0.0};  // min separation over witnesses
  double                       best_separation{0.0};    // over qualifying shifts
  Verdict                      verdict{Verdict::inconclusive};
};

/**
 * Definition-2 witness search over the given shift candidates (sorted
 * ascending, non-positive shifts rejected).
 *
 * Throws ResolutionError if sample_dt > sigma / 8 and CoverageError if h is
 * not available on [alpha, beta + max shift] and
 * [u_min - sigma, u_max + sigma + max shift].
 */
FunctionVerdict find_function_witnesses(SampledFunction const &fn,
                                        std::vector<double>    shift_candidates,
                                        FunctionSearch const  &search);

// ---------------------------------------------------------------- orbits

struct OrbitDistance
{
  Index  shift{0};
  double distance{0.0};
};

/// Truncated distance d_K(phi^s(I), I) for s = 1..max_shift. Requires the
/// window to cover [-K - max_shift, K + max_shift].
std::vector<OrbitDistance> orbit_return_distances(SequenceWindow const &sequence, Index half_width,
                                                  Index max_shift);

}  // namespace unpred
