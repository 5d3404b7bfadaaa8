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

#include <cstddef>
#include <vector>

namespace unpred {

/**
 * Piecewise-constant signal built from a sequence window: the symbol at
 * window position j is active on [origin + j*step, origin + (j+1)*step).
 */
class StepSignal
{
public:
  StepSignal(SequenceWindow sequence, double step, double origin);

  /// origin = first_index * step, so sequence index k is active on
  /// [k*step, (k+1)*step).
  static StepSignal aligned(SequenceWindow sequence, double step);

  SequenceWindow const &sequence() const noexcept
  {
    return sequence_;
  }

  double step() const noexcept
  {
    return step_;
  }

  double origin() const noexcept
  {
    return origin_;
  }

  std::size_t piece_count() const noexcept
  {
    return values_.size();
  }

  /// Left end of piece j; breakpoint(piece_count()) is the right end of the
  /// covered interval.
  double breakpoint(std::size_t j) const noexcept
  {
    return origin_ + static_cast<double>(j) * step_;
  }

  double piece_value(std::size_t j) const
  {
    return values_.at(j);
  }

  double start() const noexcept
  {
    return origin_;
  }

  double end() const noexcept
  {
    return breakpoint(values_.size());
  }

  bool covers(double t0, double t1) const noexcept;

  /// Index of the piece active at t (the last piece for t == end()).
  /// Throws CoverageError outside [start(), end()].
  std::size_t piece_at(double t) const;

  /// pi(t)
  double operator()(double t) const
  {
    return values_[piece_at(t)];
  }

  /// max |value| over the symbols present in the window.
  double sup_abs() const noexcept
  {
    return sup_abs_;
  }

private:
  SequenceWindow      sequence_;
  double              step_;
  double              origin_;
  std::vector<double> values_;
  double              sup_abs_{0.0};
};

struct FilterConfig
{
  double decay{1.0};  // lambda, 1/time
  double step{0.1};   // mu
  double sample_dt{0.01};
  double tolerance{1e-10};

  /// Throws DomainError: all fields positive and sample_dt <= step.
  void validate() const;
};

/// Uniformly sampled time series.
struct Trajectory
{
  std::vector<double> times;
  std::vector<double> values;

  std::size_t size() const noexcept
  {
    return times.size();
  }
};

/// Throws DomainError unless times are strictly increasing and uniformly
/// spaced within 1e-12 relative, and both columns have the same length.
void validate(Trajectory const &trajectory);

/// Closed-form step of x' = -decay * x + v over a duration h >= 0.
double filter_step(double x0, double v, double decay, double h) noexcept;

/**
 * The solution of x' = -decay * x + pi(t) with x(t0) = x0, evaluable at any
 * t in [t0, signal end]. State is stored at every breakpoint, so each
 * evaluation is one closed-form step from the last breakpoint.
 */
class FilteredSignal
{
public:
  FilteredSignal(StepSignal signal, double decay, double t0, double x0);

  double operator()(double t) const;

  double t0() const noexcept
  {
    return t0_;
  }

  double t_end() const noexcept
  {
    return signal_.end();
  }

  StepSignal const &signal() const noexcept
  {
    return signal_;
  }

private:
  StepSignal          signal_;
  double              decay_;
  double              t0_;
  double              x0_;
  std::size_t         first_piece_;  // piece containing t0
  std::vector<double> state_;        // state_[i] = x(breakpoint(first_piece_ + 1 + i))
};

/**
 * Samples chi on [t_start, t_end] at spacing config.sample_dt using the exact
 * per-piece recurrence
 *
 *   x(t) = x(t_k) e^{-decay (t - t_k)} + (v_k / decay)(1 - e^{-decay (t - t_k)}),
 *
 * with x(t_start) = chi_start. The lower tail of the convolution integral is
 * whatever chi_start encodes.
 */
Trajectory chi_exact(StepSignal const &signal, FilterConfig const &config, double t_start,
                     double t_end, double chi_start);

struct QuadratureValue
{
  double value{0.0};
  double truncation_bound{0.0};
};

/**
 * Convolution integral over [t - tail_T, t], integrated piece by piece:
 * each constant piece [a, b] contributes (v / decay)(e^{-decay(t-b)} - e^{-decay(t-a)}).
 * truncation_bound = sup|pi| e^{-decay tail_T} / decay bounds the discarded
 * tail of the improper integral.
 */
QuadratureValue chi_quadrature(StepSignal const &signal, FilterConfig const &config, double t,
                               double tail_T);

/// x' = -decay * x + pi(t), x(0) = phi0, sampled on [0, t_end].
Trajectory solve_ode(StepSignal const &signal, FilterConfig const &config, double phi0,
                     double t_end);

struct SeparationConstants
{
  double kappa_i{0.0};      // e^{-2 kappa} = 2/3
  double kappa_ii{0.0};     // 1 - e^{-2 kappa} = epsilon0 / 12
  double lower_bound{0.0};  // epsilon0 / 24
};

/// Requires 0 < epsilon0 <= 12 (1 - e^{-2}), i.e. kappa_ii <= 1.
SeparationConstants separation_constants(double epsilon0);

/// Largest epsilon0 accepted by separation_constants.
double max_separation_epsilon0() noexcept;

}  // namespace unpred
