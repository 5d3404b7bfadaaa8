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
#include "unpred/filter.hpp"
#include "unpred/report.hpp"
#include "unpred/unpredictable_point.hpp"
#include "unpred/verifier.hpp"

#include "gtest/gtest.h"

#include <cmath>
#include <numbers>
#include <random>

namespace unpred {
namespace {

SequenceWindow periodic(std::vector<Symbol> const &pattern, Index first, std::size_t length)
{
  std::vector<Symbol> s(length);
  for (std::size_t i = 0; i < length; ++i)
  {
    auto const k = static_cast<Index>(i) + first;
    s[i]         = pattern[static_cast<std::size_t>(((k % static_cast<Index>(pattern.size())) +
                                             static_cast<Index>(pattern.size())) %
                                            static_cast<Index>(pattern.size()))];
  }
  return SequenceWindow(Alphabet::binary(), first, std::move(s));
}

// Recomputes a sequence witness from scratch.
bool recheck(SequenceWindow const &seq, SequenceWitness const &w, SequenceSearch const &search)
{
  double err = 0.0;
  for (Index k = -search.half_width; k <= search.half_width; ++k)
  {
    err = std::max(err, std::abs(seq.value_at(k + w.zeta) - seq.value_at(k)));
  }
  double const sep = std::abs(seq.value_at(w.zeta + w.eta) - seq.value_at(w.eta));
  return err <= search.tolerance && sep >= search.epsilon0 && err == w.max_window_error &&
         sep == w.separation && w.zeta > 0 && w.eta > 0;
}

TEST(SequenceWitnessTest, PeriodicControl)
{
  auto const     seq = periodic({0, 1}, -2048, 4096);
  SequenceSearch search;
  auto const     v = find_sequence_witnesses(seq, search);
  EXPECT_EQ(Verdict::inconsistent, v.verdict);
  EXPECT_TRUE(v.witnesses.empty());
  EXPECT_GT(v.shifts_qualifying, 0u);
}

TEST(SequenceWitnessTest, ConstantControl)
{
  auto const seq = periodic({1}, -2048, 4096);
  auto const v   = find_sequence_witnesses(seq, SequenceSearch{});
  EXPECT_EQ(Verdict::inconsistent, v.verdict);
}

TEST(SequenceWitnessTest, UnpredictablePoint)
{
  auto const     seq = point_window(-(1 << 15), 1 << 16);
  SequenceSearch search;
  auto const     v = find_sequence_witnesses(seq, search);
  ASSERT_EQ(Verdict::consistent, v.verdict);
  ASSERT_EQ(3u, v.witnesses.size());
  for (std::size_t i = 0; i < v.witnesses.size(); ++i)
  {
    EXPECT_TRUE(recheck(seq, v.witnesses[i], search));
    if (i > 0)
    {
      EXPECT_GT(v.witnesses[i].zeta, v.witnesses[i - 1].zeta);
      EXPECT_GT(v.witnesses[i].eta, v.witnesses[i - 1].eta);
    }
  }
  EXPECT_EQ(1.0, v.epsilon0_achieved);
}

TEST(SequenceWitnessTest, PoissonStabilityOfPoint)
{
  // For each n <= 8 some zeta > 0 maps the central block [-n, n] onto itself.
  // The first such shift for n = 8 is 150391, so the window spans 2^20.
  auto const seq = point_window(-(1 << 19), 1 << 20);
  for (Index n = 0; n <= 8; ++n)
  {
    SequenceSearch search;
    search.half_width = n;
    search.count      = 1;
    auto const v      = find_sequence_witnesses(seq, search);
    ASSERT_EQ(Verdict::consistent, v.verdict) << "n=" << n;
    Index const zeta = v.witnesses.front().zeta;
    for (Index k = -n; k <= n; ++k)
    {
      EXPECT_EQ(point_symbol(k), point_symbol(k + zeta));
    }
  }
}

TEST(SequenceWitnessTest, BernoulliRealizationIsNotInconsistent)
{
  auto const seq = shift(realize(BernoulliSpec::fair(8, 1 << 14)), (1 << 13));
  auto const v   = find_sequence_witnesses(seq, SequenceSearch{});
  EXPECT_EQ(Verdict::consistent, v.verdict);
}

TEST(SequenceWitnessTest, InconclusiveWhenDataRunsOut)
{
  auto const     seq = point_window(-8, 24);
  SequenceSearch search;
  search.count = 50;
  auto const v = find_sequence_witnesses(seq, search);
  EXPECT_EQ(Verdict::inconclusive, v.verdict);
}

TEST(SequenceWitnessTest, CoverageAndArguments)
{
  auto const seq = point_window(-2, 6);
  EXPECT_THROW(find_sequence_witnesses(seq, SequenceSearch{}), CoverageError);
  SequenceSearch bad;
  bad.epsilon0 = 0.0;
  EXPECT_THROW(find_sequence_witnesses(point_window(-100, 200), bad), DomainError);
}

TEST(SequenceWitnessTest, MonotoneInParametersBinary)
{
  // Over {0, 1}, tolerances in [0, 1) and epsilon0 in (0, 1] describe the same
  // search, so the witness lists coincide.
  auto const     seq = point_window(-4096, 8192);
  SequenceSearch strict;
  strict.count     = 6;
  auto const base  = find_sequence_witnesses(seq, strict);
  for (double tol : {0.0, 0.3, 0.99})
  {
    for (double eps : {1.0, 0.5, 0.01})
    {
      SequenceSearch loose = strict;
      loose.tolerance      = tol;
      loose.epsilon0       = eps;
      auto const v         = find_sequence_witnesses(seq, loose);
      ASSERT_EQ(base.witnesses.size(), v.witnesses.size());
      for (std::size_t i = 0; i < v.witnesses.size(); ++i)
      {
        EXPECT_EQ(base.witnesses[i].zeta, v.witnesses[i].zeta);
        EXPECT_EQ(base.witnesses[i].eta, v.witnesses[i].eta);
      }
    }
  }
}

TEST(SequenceWitnessTest, LooserParametersKeepStrictWitnessesValid)
{
  std::mt19937_64 rng(21);
  BernoulliSpec   spec;
  spec.alphabet      = Alphabet({0.0, 0.1, 1.0});
  spec.probabilities = {0.45, 0.1, 0.45};
  for (int trial = 0; trial < 20; ++trial)
  {
    spec.seed   = rng();
    spec.length = 4000;
    auto const seq = shift(realize(spec), 2000);

    SequenceSearch strict;
    strict.half_width = 3;
    strict.count      = 4;
    strict.tolerance  = 0.0;
    strict.epsilon0   = 1.0;
    SequenceSearch loose = strict;
    loose.tolerance      = 0.1;
    loose.epsilon0       = 0.9;

    auto const tight = find_sequence_witnesses(seq, strict);
    auto const wide  = find_sequence_witnesses(seq, loose);
    EXPECT_GE(wide.shifts_qualifying, tight.shifts_qualifying);
    for (auto const &w : tight.witnesses)
    {
      EXPECT_TRUE(recheck(seq, w, strict));
      EXPECT_TRUE(recheck(seq, w, loose));
    }
  }
}

TEST(OrbitDistanceTest, ConstantAndPeriodTwo)
{
  auto const constant = periodic({0}, -40, 81);
  for (auto const &d : orbit_return_distances(constant, 8, 20))
  {
    EXPECT_EQ(0.0, d.distance);
  }

  auto const alt  = periodic({0, 1}, -40, 81);
  auto const gaps = orbit_return_distances(alt, 8, 20);
  ASSERT_EQ(20u, gaps.size());
  double const gap = 3.0 - std::ldexp(1.0, 1 - 8);
  for (auto const &d : gaps)
  {
    EXPECT_EQ(d.shift % 2 == 0 ? 0.0 : gap, d.distance) << d.shift;
  }
  EXPECT_THROW(orbit_return_distances(alt, 30, 20), CoverageError);
}

TEST(OrbitDistanceTest, MatchesComposedShifts)
{
  auto const seq  = point_window(-300, 601);
  auto const list = orbit_return_distances(seq, 10, 50);
  auto       s    = seq;
  for (auto const &d : list)
  {
    s = shift(s);
    EXPECT_EQ(metric_distance(s, seq, 10).value, d.distance);
  }
}

TEST(OrbitDistanceTest, PointReturnsCloseAtWitnessShifts)
{
  auto const seq = point_window(-(1 << 14), 1 << 15);
  double     previous_min = 0.0;
  for (Index K : {2, 4, 6, 8})
  {
    auto const list = orbit_return_distances(seq, K, 1 << 12);
    double     best = list.front().distance;
    for (auto const &d : list)
    {
      best = std::min(best, d.distance);
    }
    // d_K grows with K for every shift, so the minimum cannot shrink.
    EXPECT_GE(best, previous_min);
    previous_min = best;
    // First exact returns of [-K, K]: 4, 34, 3018 and 150391 for K = 2, 4, 6, 8.
    if (K <= 6)
    {
      EXPECT_EQ(0.0, best) << "K=" << K;
    }
    else
    {
      EXPECT_GT(best, 0.0);
    }
  }
}

TEST(FunctionWitnessTest, ZeroFunction)
{
  SampledFunction fn{[](double) { return 0.0; }, 0.0, 200.0};
  FunctionSearch  search;
  search.alpha     = 0.0;
  search.beta      = 10.0;
  search.sigma     = 0.2;
  search.sample_dt = 0.02;
  search.u_min     = 1.0;
  search.u_max     = 50.0;
  auto const v     = find_function_witnesses(fn, {1.0, 5.0, 20.0}, search);
  EXPECT_EQ(Verdict::inconsistent, v.verdict);
  EXPECT_TRUE(v.witnesses.empty());
}

TEST(FunctionWitnessTest, PeriodicSine)
{
  SampledFunction fn{[](double t) { return std::sin(t); }, 0.0, 200.0};
  FunctionSearch  search;
  search.alpha     = 0.0;
  search.beta      = 10.0;
  search.sigma     = 0.2;
  search.sample_dt = 0.02;
  search.tolerance = 1e-9;
  search.u_min     = 1.0;
  search.u_max     = 50.0;
  auto const v     = find_function_witnesses(fn, {2 * std::numbers::pi, 4 * std::numbers::pi}, search);
  EXPECT_EQ(Verdict::inconsistent, v.verdict);
  for (auto const &d : v.diagnostics)
  {
    EXPECT_TRUE(d.qualifies);
    EXPECT_LT(d.max_compact_error, 1e-12);
  }
}

TEST(FunctionWitnessTest, SineWithFarBumpSeparates)
{
  auto h = [](double t) { return std::sin(t) + std::exp(-(t - 30.0) * (t - 30.0)); };
  SampledFunction fn{h, 0.0, 200.0};
  FunctionSearch  search;
  search.alpha     = 0.0;
  search.beta      = 10.0;
  search.sigma     = 0.1;
  search.sample_dt = 0.01;
  search.tolerance = 1e-9;
  search.epsilon0  = 0.5;
  search.u_min     = 11.0;
  search.u_max     = 60.0;
  auto const v     = find_function_witnesses(fn, {2 * std::numbers::pi}, search);
  ASSERT_EQ(Verdict::consistent, v.verdict);
  auto const &w = v.witnesses.front();
  for (double t = w.u_center - w.sigma; t <= w.u_center + w.sigma; t += 0.001)
  {
    EXPECT_GE(std::abs(h(t + w.t_shift) - h(t)), 0.5 - 1e-3);
  }
  EXPECT_GE(v.epsilon0_achieved, 0.5);
}

TEST(FunctionWitnessTest, ResolutionAndCoverage)
{
  SampledFunction fn{[](double t) { return t; }, 0.0, 20.0};
  FunctionSearch  search;
  search.sigma     = 0.1;
  search.sample_dt = 0.02;
  EXPECT_THROW(find_function_witnesses(fn, {1.0}, search), ResolutionError);
  search.sample_dt = 0.01;
  search.u_max     = 19.5;
  EXPECT_THROW(find_function_witnesses(fn, {1.0}, search), CoverageError);
  search.u_max = 2.0;
  EXPECT_THROW(find_function_witnesses(fn, {-1.0}, search), DomainError);
}

TEST(FunctionWitnessTest, FilteredPointReportsSeparation)
{
  auto const seq    = point_window(-(1 << 15), 1 << 16);
  auto const signal = StepSignal::aligned(seq, 1.0);
  FilteredSignal const chi(signal, 1.0, signal.start(), 0.0);

  SequenceSearch seq_search;
  seq_search.half_width = 4;
  seq_search.count      = 3;
  auto const seq_v      = find_sequence_witnesses(seq, seq_search);
  ASSERT_EQ(Verdict::consistent, seq_v.verdict);
  std::vector<double> shifts;
  for (auto const &w : seq_v.witnesses)
  {
    shifts.push_back(static_cast<double>(w.zeta));
  }

  auto const     k = separation_constants(1.0);
  FunctionSearch search;
  search.alpha     = 0.0;
  search.beta      = 1.0;
  search.sigma     = k.kappa_ii / 2.0;
  search.sample_dt = search.sigma / 8.0;
  search.tolerance = 0.05;  // symbols agree on [-4, 4], so the error is about e^{-4}
  search.epsilon0  = k.lower_bound;
  search.u_min     = 1.0;
  search.u_max     = 2000.0;
  SampledFunction fn{[&](double t) { return chi(t); }, signal.start(), signal.end()};
  auto const      v = find_function_witnesses(fn, shifts, search);
  EXPECT_GE(v.best_separation, 0.0);
  EXPECT_EQ(Verdict::consistent, v.verdict);

  auto const report = function_report(v, search, shifts, SeparationPrediction{k.lower_bound, k.kappa_i, k.kappa_ii});
  EXPECT_EQ(1.0 / 24.0, report["separation_check"]["predicted_lower_bound"].get<double>());
  EXPECT_GE(report["separation_check"]["achieved_separation"].get<double>(), 0.0);
}

TEST(ReportTest, KeyOrderIsStable)
{
  auto const seq = point_window(-4096, 8192);
  SequenceSearch search;
  auto const     report = sequence_report(find_sequence_witnesses(seq, search), search);
  std::vector<std::string> keys;
  for (auto it = report.begin(); it != report.end(); ++it)
  {
    keys.push_back(it.key());
  }
  EXPECT_EQ((std::vector<std::string>{"verdict", "epsilon0_requested", "epsilon0_achieved", "witnesses",
                                      "data_coverage", "parameters"}),
            keys);
  EXPECT_EQ("consistent", report["verdict"].get<std::string>());
  EXPECT_EQ(dump_report(report), dump_report(Json::parse(dump_report(report))));
}

}  // namespace
}  // namespace unpred
