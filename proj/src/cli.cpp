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

#include "unpred/cli.hpp"

#include "unpred/bernoulli.hpp"
#include "unpred/errors.hpp"
#include "unpred/filter.hpp"
#include "unpred/report.hpp"
#include "unpred/sequence_io.hpp"
#include "unpred/timeseries_csv.hpp"
#include "unpred/unpredictable_point.hpp"
#include "unpred/verifier.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

namespace unpred::cli {
namespace {

void emit(std::string const &path, std::string const &content, std::ostream &out)
{
  if (path.empty())
  {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
  {
    throw Error("cannot open '" + path + "' for writing");
  }
  file << content;
  if (!file)
  {
    throw Error("failed writing '" + path + "'");
  }
}

struct PointArgs
{
  Index       first{0};
  std::size_t length{0};
  std::string alphabet{"0,1"};
  std::string out;
};

struct BernoulliArgs
{
  std::uint64_t seed{0};
  std::size_t   length{0};
  std::string   p{"0.5"};
  std::string   alphabet{"0,1"};
  std::string   out;
};

struct FilterArgs
{
  std::string in;
  double      mu{0.1};
  double      lambda{1.0};
  double      phi0{0.5};
  double      t_end{100.0};
  double      dt{0.01};
  double      burn_in{50.0};
  bool        trim{false};
  int         digits{kDefaultCsvDigits};
  std::string out;
};

struct VerifySeqArgs
{
  std::string in;
  Index       half_width{4};
  double      tolerance{0.0};
  double      epsilon0{0.0};  // 0: use the alphabet's epsilon0
  std::size_t count{3};
  std::string out;
};

struct VerifyFnArgs
{
  std::string in;
  double      mu{1.0};
  double      lambda{1.0};
  double      chi_start{0.0};
  std::string shifts;
  Index       seq_half_width{4};
  std::size_t seq_count{5};
  double      alpha{0.0};
  double      beta{1.0};
  double      sigma{0.0};      // 0: kappa_ii / 2
  double      tolerance{0.05};
  double      epsilon0{0.0};   // 0: alphabet epsilon0 / 24
  double      dt{0.0};         // 0: sigma / 8
  double      u_min{std::numeric_limits<double>::quiet_NaN()};
  double      u_max{std::numeric_limits<double>::quiet_NaN()};
  std::size_t count{1};
  std::string out;
};

struct MetricArgs
{
  std::string a;
  std::string b;
  Index       half_width{kDefaultHalfWidth};
  std::string out;
};

struct ShiftArgs
{
  std::string in;
  Index       times{1};
  std::string out;
};

int run_point(PointArgs const &a, std::ostream &out)
{
  Alphabet const alphabet(parse_double_list(a.alphabet));
  auto const     window = point_window(a.first, a.length, alphabet);
  emit(a.out, format_sequence(window), out);
  return kSuccess;
}

int run_bernoulli(BernoulliArgs const &a, std::ostream &out)
{
  BernoulliSpec spec;
  spec.alphabet = Alphabet(parse_double_list(a.alphabet));
  spec.seed     = a.seed;
  spec.length   = a.length;

  auto const p = parse_double_list(a.p);
  if (p.size() == 1 && spec.alphabet.size() == 2)
  {
    // Single value: probability of the second symbol.
    spec.probabilities = {1.0 - p[0], p[0]};
  }
  else
  {
    spec.probabilities = p;
  }
  emit(a.out, format_sequence(realize(spec)), out);
  return kSuccess;
}

int run_filter(FilterArgs const &a, std::ostream &out, std::ostream &err)
{
  auto const sequence = read_sequence_file(a.in);

  FilterConfig config;
  config.decay     = a.lambda;
  config.step      = a.mu;
  config.sample_dt = a.dt;
  config.validate();

  auto const signal     = StepSignal::aligned(sequence, a.mu);
  auto       trajectory = solve_ode(signal, config, a.phi0, a.t_end);

  // |phi(t) - chi(t)| <= |phi0 - chi(0)| e^{-lambda t} and |chi(0)| <= sup|pi| / lambda.
  double const transient =
      (std::abs(a.phi0) + signal.sup_abs() / a.lambda) * std::exp(-a.lambda * a.burn_in);
  err << "accepted graph of chi: t in [" << a.burn_in << ", " << a.t_end
      << "], transient bound " << transient << "\n";

  if (a.trim)
  {
    Trajectory kept;
    for (std::size_t i = 0; i < trajectory.size(); ++i)
    {
      if (trajectory.times[i] >= a.burn_in - 1e-9 * a.dt)
      {
        kept.times.push_back(trajectory.times[i]);
        kept.values.push_back(trajectory.values[i]);
      }
    }
    trajectory = std::move(kept);
  }
  emit(a.out, format_csv(trajectory, a.digits), out);
  return kSuccess;
}

int run_verify_seq(VerifySeqArgs const &a, std::ostream &out)
{
  auto const     sequence = read_sequence_file(a.in);
  SequenceSearch search;
  search.half_width = a.half_width;
  search.tolerance  = a.tolerance;
  search.epsilon0   = a.epsilon0 > 0.0 ? a.epsilon0 : sequence.alphabet().epsilon0();
  search.count      = a.count;

  auto const verdict = find_sequence_witnesses(sequence, search);
  emit(a.out, dump_report(sequence_report(verdict, search)), out);
  return kSuccess;
}

int run_verify_fn(VerifyFnArgs const &a, std::ostream &out)
{
  auto const sequence = read_sequence_file(a.in);
  auto const signal   = StepSignal::aligned(sequence, a.mu);

  double const eps0       = sequence.alphabet().epsilon0();
  auto const   constants  = separation_constants(std::min(eps0, max_separation_epsilon0()));
  std::vector<double> shifts;
  if (!a.shifts.empty())
  {
    shifts = parse_double_list(a.shifts);
  }
  else
  {
    SequenceSearch seq_search;
    seq_search.half_width = a.seq_half_width;
    seq_search.tolerance  = 0.0;
    seq_search.epsilon0   = eps0;
    seq_search.count      = a.seq_count;
    for (auto const &w : find_sequence_witnesses(sequence, seq_search).witnesses)
    {
      shifts.push_back(static_cast<double>(w.zeta) * a.mu);
    }
  }

  FunctionSearch search;
  search.alpha     = a.alpha;
  search.beta      = a.beta;
  search.sigma     = a.sigma > 0.0 ? a.sigma : constants.kappa_ii / 2.0;
  search.tolerance = a.tolerance;
  search.epsilon0  = a.epsilon0 > 0.0 ? a.epsilon0 : constants.lower_bound;
  search.sample_dt = a.dt > 0.0 ? a.dt : search.sigma / 8.0;
  search.count     = a.count;

  FilteredSignal const chi(signal, a.lambda, signal.start(), a.chi_start);
  double const max_shift = shifts.empty() ? 0.0 : *std::max_element(shifts.begin(), shifts.end());
  search.u_min = std::isnan(a.u_min) ? std::max(a.alpha, signal.start() + search.sigma) : a.u_min;
  search.u_max = std::isnan(a.u_max) ? signal.end() - search.sigma - max_shift : a.u_max;

  SampledFunction fn{[&chi](double t) { return chi(t); }, signal.start(), signal.end()};
  auto const      verdict = find_function_witnesses(fn, shifts, search);

  SeparationPrediction prediction{constants.lower_bound, constants.kappa_i, constants.kappa_ii};
  emit(a.out, dump_report(function_report(verdict, search, shifts, prediction)), out);
  return kSuccess;
}

int run_metric(MetricArgs const &a, std::ostream &out)
{
  auto const lhs = read_sequence_file(a.a);
  auto const rhs = read_sequence_file(a.b);
  auto const d   = metric_distance(lhs, rhs, a.half_width);

  Json report;
  report["half_width"] = a.half_width;
  report["value"]      = d.value;
  report["tail_bound"] = d.tail_bound;
  emit(a.out, dump_report(report), out);
  return kSuccess;
}

int run_shift(ShiftArgs const &a, std::ostream &out)
{
  auto const window = read_sequence_file(a.in);
  if (window.length() < 2)
  {
    throw DomainError("shift needs a window of length >= 2");
  }
  emit(a.out, format_sequence(shift(window, a.times)), out);
  return kSuccess;
}

}  // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Unpredictable sequences and functions: construction and witness searches"};
  app.name(args.empty() ? "unpred" : args.front());
  app.require_subcommand(1);

  PointArgs point;
  auto     *point_cmd = app.add_subcommand("point", "Window of the unpredictable point");
  point_cmd->add_option("--first", point.first, "Index of the first symbol")->required();
  point_cmd->add_option("--length", point.length, "Number of symbols")
      ->required()
      ->check(CLI::PositiveNumber);
  point_cmd->add_option("--alphabet", point.alphabet, "Two symbol values a,b")
      ->capture_default_str();
  point_cmd->add_option("--out", point.out, "Sequence file (default: stdout)");

  BernoulliArgs bern;
  auto         *bern_cmd = app.add_subcommand("bernoulli", "Random Bernoulli realization");
  bern_cmd->add_option("--seed", bern.seed, "64-bit generator seed")->required();
  bern_cmd->add_option("--length", bern.length, "Number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  bern_cmd->add_option("--p", bern.p,
                       "Probability of the second symbol, or one probability per symbol")
      ->capture_default_str();
  bern_cmd->add_option("--alphabet", bern.alphabet, "Symbol values")->capture_default_str();
  bern_cmd->add_option("--out", bern.out, "Sequence file (default: stdout)");

  FilterArgs filt;
  auto      *filt_cmd = app.add_subcommand("filter", "Filter a sequence into a time series");
  filt_cmd->add_option("--in", filt.in, "Sequence file")->required();
  filt_cmd->add_option("--mu", filt.mu, "Step length")->check(CLI::PositiveNumber)->capture_default_str();
  filt_cmd->add_option("--lambda", filt.lambda, "Decay rate")->check(CLI::PositiveNumber)->capture_default_str();
  filt_cmd->add_option("--phi0", filt.phi0, "Initial value at t = 0")->capture_default_str();
  filt_cmd->add_option("--t-end", filt.t_end, "Horizon")->check(CLI::PositiveNumber)->capture_default_str();
  filt_cmd->add_option("--dt", filt.dt, "Sample spacing")->check(CLI::PositiveNumber)->capture_default_str();
  filt_cmd->add_option("--burn-in", filt.burn_in, "Transient length")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  filt_cmd->add_flag("--trim", filt.trim, "Drop samples before the burn-in");
  filt_cmd->add_option("--digits", filt.digits, "Significant digits")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  filt_cmd->add_option("--out", filt.out, "CSV file (default: stdout)");

  VerifySeqArgs vseq;
  auto         *vseq_cmd = app.add_subcommand("verify-seq", "Witness search for sequences");
  vseq_cmd->add_option("--in", vseq.in, "Sequence file")->required();
  vseq_cmd->add_option("--half-width", vseq.half_width, "L")->check(CLI::NonNegativeNumber)->capture_default_str();
  vseq_cmd->add_option("--tolerance", vseq.tolerance, "Window tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  vseq_cmd->add_option("--epsilon0", vseq.epsilon0, "Separation (default: alphabet epsilon0)")
      ->check(CLI::PositiveNumber);
  vseq_cmd->add_option("--count", vseq.count, "Witnesses wanted")->check(CLI::PositiveNumber)->capture_default_str();
  vseq_cmd->add_option("--out", vseq.out, "JSON report (default: stdout)");

  VerifyFnArgs vfn;
  auto        *vfn_cmd = app.add_subcommand("verify-fn", "Witness search for the filtered function");
  vfn_cmd->add_option("--in", vfn.in, "Sequence file")->required();
  vfn_cmd->add_option("--mu", vfn.mu, "Step length")->check(CLI::PositiveNumber)->capture_default_str();
  vfn_cmd->add_option("--lambda", vfn.lambda, "Decay rate")->check(CLI::PositiveNumber)->capture_default_str();
  vfn_cmd->add_option("--chi-start", vfn.chi_start, "Value at the start of the signal")
      ->capture_default_str();
  vfn_cmd->add_option("--shifts", vfn.shifts, "Candidate shifts (default: from sequence witnesses)");
  vfn_cmd->add_option("--seq-half-width", vfn.seq_half_width, "L for deriving shifts")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  vfn_cmd->add_option("--seq-count", vfn.seq_count, "Sequence witnesses to derive")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vfn_cmd->add_option("--alpha", vfn.alpha, "Compact interval start")->capture_default_str();
  vfn_cmd->add_option("--beta", vfn.beta, "Compact interval end")->capture_default_str();
  vfn_cmd->add_option("--sigma", vfn.sigma, "Half-width of separation interval (default: kappa_ii/2)")
      ->check(CLI::PositiveNumber);
  vfn_cmd->add_option("--tolerance", vfn.tolerance, "Convergence tolerance on the compact")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  vfn_cmd->add_option("--epsilon0", vfn.epsilon0, "Separation (default: epsilon0/24)")
      ->check(CLI::PositiveNumber);
  vfn_cmd->add_option("--dt", vfn.dt, "Sample spacing (default: sigma/8)")->check(CLI::PositiveNumber);
  vfn_cmd->add_option("--u-min", vfn.u_min, "First separation center");
  vfn_cmd->add_option("--u-max", vfn.u_max, "Last separation center");
  vfn_cmd->add_option("--count", vfn.count, "Witnesses wanted")->check(CLI::PositiveNumber)->capture_default_str();
  vfn_cmd->add_option("--out", vfn.out, "JSON report (default: stdout)");

  MetricArgs met;
  auto      *met_cmd = app.add_subcommand("metric", "Truncated distance between two sequences");
  met_cmd->add_option("--a", met.a, "First sequence file")->required();
  met_cmd->add_option("--b", met.b, "Second sequence file")->required();
  met_cmd->add_option("--half-width", met.half_width, "K")->check(CLI::PositiveNumber)->capture_default_str();
  met_cmd->add_option("--out", met.out, "JSON output (default: stdout)");

  ShiftArgs sh;
  auto     *sh_cmd = app.add_subcommand("shift", "Apply the shift map");
  sh_cmd->add_option("--in", sh.in, "Sequence file")->required();
  sh_cmd->add_option("--times", sh.times, "Number of shifts")->capture_default_str();
  sh_cmd->add_option("--out", sh.out, "Sequence file (default: stdout)");

  std::vector<char *> argv;
  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty())
  {
    storage.emplace_back("unpred");
  }
  for (auto &s : storage)
  {
    argv.push_back(s.data());
  }

  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try
  {
    if (point_cmd->parsed())
    {
      return run_point(point, out);
    }
    if (bern_cmd->parsed())
    {
      return run_bernoulli(bern, out);
    }
    if (filt_cmd->parsed())
    {
      return run_filter(filt, out, err);
    }
    if (vseq_cmd->parsed())
    {
      return run_verify_seq(vseq, out);
    }
    if (vfn_cmd->parsed())
    {
      return run_verify_fn(vfn, out);
    }
    if (met_cmd->parsed())
    {
      return run_metric(met, out);
    }
    if (sh_cmd->parsed())
    {
      return run_shift(sh, out);
    }
  }
  catch (Error const &e)
  {
    err << "error: " << e.what() << "\n";
    return kRunFailure;
  }
  catch (std::exception const &e)
  {
    err << "error: " << e.what() << "\n";
    return kRunFailure;
  }
  return kUsage;
}

}  // namespace unpred::cli
