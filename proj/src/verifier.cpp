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

#include "unpred/verifier.hpp"

#include "unpred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace unpred {

std::string_view to_string(Verdict v) noexcept
{
  switch (v)
  {
  case Verdict::consistent:
    return "consistent";
  case Verdict::inconsistent:
    return "inconsistent";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

namespace {

bool is_periodic(std::vector<double> const &v, std::size_t period)
{
  for (std::size_t i = 0; i + period < v.size(); ++i)
  {
    if (v[i] != v[i + period])
    {
      return false;
    }
  }
  return true;
}

}  // namespace

SequenceVerdict find_sequence_witnesses(SequenceWindow const &sequence,
                                        SequenceSearch const &search)
{
  Index const L = search.half_width;
  if (L < 0)
  {
    throw DomainError("half-width must be non-negative");
  }
  if (!(search.tolerance >= 0.0) || !(search.epsilon0 > 0.0))
  {
    throw DomainError("tolerance must be >= 0 and epsilon0 > 0");
  }
  if (search.count == 0)
  {
    throw DomainError("witness count must be positive");
  }
  if (!sequence.covers(-L, L + 1))
  {
    throw CoverageError("sequence window must cover [-" + std::to_string(L) + ", " +
                        std::to_string(L + 1) + "] for at least one candidate shift");
  }

  Index const first  = sequence.first_index();
  Index const last   = sequence.last_index();
  auto const  values = sequence.values();
  auto        at     = [&](Index k) { return values[static_cast<std::size_t>(k - first)]; };

  SequenceVerdict out;
  out.coverage_first = first;
  out.coverage_last  = last;

  bool  periodic_without_separation = false;
  Index previous_eta                = 0;

  for (Index zeta = 1; zeta + L <= last; ++zeta)
  {
    ++out.shifts_scanned;

    double error = 0.0;
    for (Index k = -L; k <= L && error <= search.tolerance; ++k)
    {
      error = std::max(error, std::abs(at(k + zeta) - at(k)));
    }
    if (error > search.tolerance)
    {
      continue;
    }
    ++out.shifts_qualifying;

    // Separation times: eta >= 1 with zeta + eta inside the window.
    Index found       = 0;
    bool  any_eta     = false;
    for (Index eta = 1; eta + zeta <= last; ++eta)
    {
      double const gap = std::abs(at(zeta + eta) - at(eta));
      if (gap >= search.epsilon0)
      {
        any_eta = true;
        if (eta > previous_eta)
        {
          found = eta;
          break;
        }
      }
    }

    if (found == 0)
    {
      if (!any_eta && !periodic_without_separation)
      {
        periodic_without_separation = is_periodic(values, static_cast<std::size_t>(zeta));
      }
      continue;
    }

    SequenceWitness w;
    w.zeta             = zeta;
    w.eta              = found;
    w.window_lo        = -L;
    w.window_hi        = L;
    w.max_window_error = error;
    w.separation       = std::abs(at(zeta + found) - at(found));
    out.witnesses.push_back(w);
    previous_eta = found;

    if (out.witnesses.size() >= search.count)
    {
      break;
    }
  }

  if (!out.witnesses.empty())
  {
    out.epsilon0_achieved = std::numeric_limits<double>::infinity();
    for (auto const &w : out.witnesses)
    {
      out.epsilon0_achieved = std::min(out.epsilon0_achieved, w.separation);
    }
  }

  if (out.witnesses.size() >= search.count)
  {
    out.verdict = Verdict::consistent;
  }
  else if (periodic_without_separation)
  {
    out.verdict = Verdict::inconsistent;
  }
  else
  {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

FunctionVerdict find_function_witnesses(SampledFunction const &fn,
                                        std::vector<double>    shift_candidates,
                                        FunctionSearch const  &search)
{
  if (!fn.h)
  {
    throw DomainError("function search: no function supplied");
  }
  if (!(search.sigma > 0.0) || !(search.sample_dt > 0.0) || !(search.epsilon0 > 0.0) ||
      !(search.tolerance >= 0.0))
  {
    throw DomainError("function search: sigma, sample_dt and epsilon0 must be positive");
  }
  if (!(search.beta >= search.alpha) || !(search.u_max >= search.u_min))
  {
    throw DomainError("function search: empty compact or center range");
  }
  if (search.count == 0)
  {
    throw DomainError("witness count must be positive");
  }
  if (search.sample_dt > search.sigma / 8.0)
  {
    throw ResolutionError("function search: sample spacing " + std::to_string(search.sample_dt) +
                          " exceeds sigma/8 = " + std::to_string(search.sigma / 8.0));
  }

  std::sort(shift_candidates.begin(), shift_candidates.end());
  shift_candidates.erase(std::unique(shift_candidates.begin(), shift_candidates.end()),
                         shift_candidates.end());
  if (!shift_candidates.empty() && !(shift_candidates.front() > 0.0))
  {
    throw DomainError("function search: shifts must be positive");
  }

  double const dt        = search.sample_dt;
  double const max_shift = shift_candidates.empty() ? 0.0 : shift_candidates.back();
  double const lo        = std::min(search.alpha, search.u_min - search.sigma);
  double const hi        = std::max(search.beta, search.u_max + search.sigma) + max_shift;
  if (lo < fn.t_min || hi > fn.t_max)
  {
    throw CoverageError("function search: h must be available on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }

  auto const compact_points = static_cast<std::size_t>(std::floor((search.beta - search.alpha) / dt + 1e-9)) + 1;
  auto const half           = static_cast<std::size_t>(std::floor(search.sigma / dt + 1e-9));
  auto const centers        = static_cast<std::size_t>(std::floor((search.u_max - search.u_min) / dt + 1e-9)) + 1;
  double const grid_start   = search.u_min - static_cast<double>(half) * dt;
  std::size_t const grid_points = centers + 2 * half;

  FunctionVerdict out;
  double previous_u = -std::numeric_limits<double>::infinity();
  bool   periodic_without_separation = false;
  out.best_separation = 0.0;

  for (double s : shift_candidates)
  {
    ShiftDiagnostic diag;
    diag.t_shift = s;

    for (std::size_t i = 0; i < compact_points; ++i)
    {
      double const t = std::min(search.alpha + static_cast<double>(i) * dt, search.beta);
      diag.max_compact_error = std::max(diag.max_compact_error, std::abs(fn.h(t + s) - fn.h(t)));
    }
    diag.qualifies = diag.max_compact_error <= search.tolerance;
    if (!diag.qualifies)
    {
      out.diagnostics.push_back(diag);
      continue;
    }

    std::vector<double> gap(grid_points);
    double              scan_error = 0.0;
    for (std::size_t i = 0; i < grid_points; ++i)
    {
      double const t = grid_start + static_cast<double>(i) * dt;
      gap[i]         = std::abs(fn.h(t + s) - fn.h(t));
      scan_error     = std::max(scan_error, gap[i]);
    }

    // Sliding minimum over windows gap[c .. c + 2*half], centered at u_min + c*dt.
    std::deque<std::size_t> window;
    bool                    witnessed = false;
    diag.best_separation            = -1.0;
    for (std::size_t i = 0; i < grid_points; ++i)
    {
      while (!window.empty() && gap[window.back()] >= gap[i])
      {
        window.pop_back();
      }
      window.push_back(i);
      if (i < 2 * half)
      {
        continue;
      }
      std::size_t const c = i - 2 * half;
      while (window.front() < c)
      {
        window.pop_front();
      }
      double const min_gap = gap[window.front()];
      double const u       = search.u_min + static_cast<double>(c) * dt;
      if (min_gap > diag.best_separation)
      {
        diag.best_separation = min_gap;
        diag.best_center     = u;
      }
      if (!witnessed && min_gap >= search.epsilon0 && u > previous_u &&
          out.witnesses.size() < search.count)
      {
        FunctionWitness w;
        w.t_shift                    = s;
        w.u_center                   = u;
        w.sigma                      = search.sigma;
        w.max_compact_error          = diag.max_compact_error;
        w.min_separation_on_interval = min_gap;
        out.witnesses.push_back(w);
        previous_u = u;
        witnessed  = true;
      }
    }

    out.best_separation = std::max(out.best_separation, diag.best_separation);
    if (diag.best_separation < search.epsilon0 &&
        std::max(scan_error, diag.max_compact_error) <= search.tolerance)
    {
      periodic_without_separation = true;
    }
    out.diagnostics.push_back(diag);
  }

  if (!out.witnesses.empty())
  {
    out.epsilon0_achieved = std::numeric_limits<double>::infinity();
    for (auto const &w : out.witnesses)
    {
      out.epsilon0_achieved = std::min(out.epsilon0_achieved, w.min_separation_on_interval);
    }
  }

  if (out.witnesses.size() >= search.count)
  {
    out.verdict = Verdict::consistent;
  }
  else if (periodic_without_separation)
  {
    out.verdict = Verdict::inconsistent;
  }
  else
  {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

std::vector<OrbitDistance> orbit_return_distances(SequenceWindow const &sequence, Index half_width,
                                                  Index max_shift)
{
  if (half_width < 1 || max_shift < 1)
  {
    throw DomainError("orbit distances: K and max_shift must be positive");
  }
  if (!sequence.covers(-half_width - max_shift, half_width + max_shift))
  {
    throw CoverageError("orbit distances: window must cover [-" +
                        std::to_string(half_width + max_shift) + ", " +
                        std::to_string(half_width + max_shift) + "]");
  }

  Index const first  = sequence.first_index();
  auto const  values = sequence.values();
  auto        at     = [&](Index k) { return values[static_cast<std::size_t>(k - first)]; };

  std::vector<OrbitDistance> out;
  out.reserve(static_cast<std::size_t>(max_shift));
  for (Index s = 1; s <= max_shift; ++s)
  {
    // Same summation order as metric_distance.
    double sum = 0.0;
    for (Index a = half_width; a >= 0; --a)
    {
      double term = std::abs(at(a + s) - at(a));
      if (a != 0)
      {
        term += std::abs(at(-a + s) - at(-a));
      }
      sum += term * std::ldexp(1.0, -static_cast<int>(std::min<Index>(a, 2000)));
    }
    out.push_back({s, sum});
  }
  return out;
}

}  // namespace unpred
