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

#include "unpred/filter.hpp"

#include "unpred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace unpred {
namespace {

std::string interval_text(double a, double b)
{
  std::ostringstream os;
  os.precision(17);
  os << '[' << a << ", " << b << ']';
  return os.str();
}

// Slack for comparing times against breakpoints computed as origin + j*step.
double time_slack(StepSignal const &signal)
{
  return 1e-9 * signal.step();
}

void check_step(StepSignal const &signal, FilterConfig const &config)
{
  config.validate();
  if (std::abs(signal.step() - config.step) > 1e-12 * config.step)
  {
    throw DomainError("signal step does not match config step");
  }
}

}  // namespace

StepSignal::StepSignal(SequenceWindow sequence, double step, double origin)
  : sequence_(std::move(sequence))
  , step_(step)
  , origin_(origin)
{
  if (!(step_ > 0.0) || !std::isfinite(step_))
  {
    throw DomainError("step signal: step must be positive");
  }
  if (!std::isfinite(origin_))
  {
    throw DomainError("step signal: origin must be finite");
  }
  values_ = sequence_.values();
  for (double v : values_)
  {
    sup_abs_ = std::max(sup_abs_, std::abs(v));
  }
}

StepSignal StepSignal::aligned(SequenceWindow sequence, double step)
{
  double const origin = static_cast<double>(sequence.first_index()) * step;
  return StepSignal(std::move(sequence), step, origin);
}

bool StepSignal::covers(double t0, double t1) const noexcept
{
  double const slack = 1e-9 * step_;
  return t0 >= start() - slack && t1 <= end() + slack && t0 <= t1;
}

std::size_t StepSignal::piece_at(double t) const
{
  if (!covers(t, t))
  {
    throw CoverageError("time " + std::to_string(t) + " outside signal " +
                        interval_text(start(), end()));
  }
  auto const n   = values_.size();
  double const f = std::floor((t - origin_) / step_);
  std::size_t  j = f <= 0.0 ? 0 : std::min(static_cast<std::size_t>(f), n - 1);
  while (j > 0 && breakpoint(j) > t)
  {
    --j;
  }
  while (j + 1 < n && breakpoint(j + 1) <= t)
  {
    ++j;
  }
  return j;
}

void FilterConfig::validate() const
{
  if (!(decay > 0.0) || !std::isfinite(decay))
  {
    throw DomainError("filter: decay must be positive");
  }
  if (!(step > 0.0) || !std::isfinite(step))
  {
    throw DomainError("filter: step must be positive");
  }
  if (!(sample_dt > 0.0) || !std::isfinite(sample_dt))
  {
    throw DomainError("filter: sample_dt must be positive");
  }
  if (sample_dt > step)
  {
    throw DomainError("filter: sample_dt must not exceed step");
  }
  if (!(tolerance > 0.0))
  {
    throw DomainError("filter: tolerance must be positive");
  }
}

void validate(Trajectory const &trajectory)
{
  auto const &t = trajectory.times;
  if (t.size() != trajectory.values.size())
  {
    throw DomainError("trajectory: times and values differ in length");
  }
  if (t.size() < 2)
  {
    return;
  }
  double const dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i)
  {
    double const gap = t[i] - t[i - 1];
    if (!(gap > 0.0))
    {
      throw DomainError("trajectory: times must be strictly increasing");
    }
    double const expected = t.front() + static_cast<double>(i) * dt;
    if (std::abs(t[i] - expected) > 1e-12 * std::max({std::abs(t[i]), std::abs(dt), 1.0}))
    {
      throw DomainError("trajectory: times are not uniformly spaced");
    }
  }
}

double filter_step(double x0, double v, double decay, double h) noexcept
{
  // x0 e^{-decay h} + (v / decay)(1 - e^{-decay h})
  double const gain = -std::expm1(-decay * h);
  return x0 + (v / decay - x0) * gain;
}

FilteredSignal::FilteredSignal(StepSignal signal, double decay, double t0, double x0)
  : signal_(std::move(signal))
  , decay_(decay)
  , t0_(t0)
  , x0_(x0)
{
  if (!(decay_ > 0.0) || !std::isfinite(decay_))
  {
    throw DomainError("filter: decay must be positive");
  }
  first_piece_ = signal_.piece_at(t0_);

  // Forced response from a zero state at t0; the initial value enters as
  // x0 e^{-decay (t - t0)} at evaluation time.
  auto const n = signal_.piece_count();
  state_.reserve(n - first_piece_);
  double z      = 0.0;
  double from   = t0_;
  for (std::size_t j = first_piece_; j < n; ++j)
  {
    double const to = signal_.breakpoint(j + 1);
    z               = filter_step(z, signal_.piece_value(j), decay_, std::max(0.0, to - from));
    state_.push_back(z);
    from = to;
  }
}

double FilteredSignal::operator()(double t) const
{
  if (t < t0_ - time_slack(signal_))
  {
    throw CoverageError("filtered signal starts at " + std::to_string(t0_));
  }
  std::size_t const j = std::max(signal_.piece_at(t), first_piece_);

  double z_start = 0.0;
  double from    = t0_;
  if (j > first_piece_)
  {
    z_start = state_[j - first_piece_ - 1];
    from    = signal_.breakpoint(j);
  }
  double const forced = filter_step(z_start, signal_.piece_value(j), decay_, std::max(0.0, t - from));
  return forced + x0_ * std::exp(-decay_ * std::max(0.0, t - t0_));
}

Trajectory chi_exact(StepSignal const &signal, FilterConfig const &config, double t_start,
                     double t_end, double chi_start)
{
  check_step(signal, config);
  if (!(t_end > t_start))
  {
    throw DomainError("chi_exact: t_end must exceed t_start");
  }
  if (!signal.covers(t_start, t_end))
  {
    throw CoverageError("chi_exact: signal " + interval_text(signal.start(), signal.end()) +
                        " does not cover " + interval_text(t_start, t_end));
  }

  FilteredSignal const chi(signal, config.decay, t_start, chi_start);

  double const span  = (t_end - t_start) / config.sample_dt;
  auto const   count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;

  Trajectory out;
  out.times.reserve(count);
  out.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
  {
    double const t = t_start + static_cast<double>(i) * config.sample_dt;
    out.times.push_back(t);
    out.values.push_back(chi(std::min(t, signal.end())));
  }
  return out;
}

QuadratureValue chi_quadrature(StepSignal const &signal, FilterConfig const &config, double t,
                               double tail_T)
{
  check_step(signal, config);
  if (!(tail_T > 0.0))
  {
    throw DomainError("chi_quadrature: tail_T must be positive");
  }
  double const lo = t - tail_T;
  if (!signal.covers(lo, t))
  {
    throw CoverageError("chi_quadrature: signal " + interval_text(signal.start(), signal.end()) +
                        " does not cover " + interval_text(lo, t));
  }

  double const lambda = config.decay;
  std::size_t  first  = signal.piece_at(lo);
  std::size_t  last   = signal.piece_at(t);

  // Sum from the far past toward t.
  double sum = 0.0;
  for (std::size_t j = first; j <= last; ++j)
  {
    double const a = std::max(lo, signal.breakpoint(j));
    double const b = std::min(t, signal.breakpoint(j + 1));
    if (!(b > a))
    {
      continue;
    }
    // (v / lambda) (e^{-lambda (t - b)} - e^{-lambda (t - a)})
    double const near = std::exp(-lambda * (t - b));
    double const span = -std::expm1(-lambda * (b - a));
    sum += signal.piece_value(j) / lambda * near * span;
  }

  return {sum, signal.sup_abs() * std::exp(-lambda * tail_T) / lambda};
}

Trajectory solve_ode(StepSignal const &signal, FilterConfig const &config, double phi0,
                     double t_end)
{
  return chi_exact(signal, config, 0.0, t_end, phi0);
}

double max_separation_epsilon0() noexcept
{
  return -12.0 * std::expm1(-2.0);
}

SeparationConstants separation_constants(double epsilon0)
{
  if (!(epsilon0 > 0.0) || epsilon0 > max_separation_epsilon0())
  {
    throw DomainError("separation_constants: epsilon0 must lie in (0, 12 (1 - e^-2)]");
  }
  SeparationConstants c;
  c.kappa_i     = std::log(1.5) / 2.0;
  c.kappa_ii    = -std::log1p(-epsilon0 / 12.0) / 2.0;
  c.lower_bound = epsilon0 / 24.0;
  return c;
}

}  // namespace unpred
