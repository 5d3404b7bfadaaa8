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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include "unpred/bernoulli.hpp"
#include "unpred/cli.hpp"
#include "unpred/filter.hpp"
#include "unpred/report.hpp"
#include "unpred/sequence_io.hpp"
#include "unpred/timeseries_csv.hpp"
#include "unpred/unpredictable_point.hpp"
#include "unpred/verifier.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace unpred;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome
{
  bool        pass{false};
  std::string detail;
};

fs::path const &work_dir()
{
  static fs::path const dir = [] {
    auto d = fs::temp_directory_path() / "unpred_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(std::string const &name)
{
  return (work_dir() / name).string();
}

std::string slurp(std::string const &p)
{
  std::ifstream      in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cli_run(std::vector<std::string> args, std::string *stdout_text = nullptr)
{
  args.insert(args.begin(), "unpred");
  std::ostringstream out;
  std::ostringstream err;
  int const          code = cli::run(args, out, err);
  if (stdout_text != nullptr)
  {
    *stdout_text = out.str();
  }
  return code;
}

std::string fmt(char const *format, double a, double b = 0.0, double c = 0.0)
{
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

// 1. Bernoulli -> filter pipeline with mu = 0.1, phi0 = 0.5 stays in [0, 1].
Outcome figure_pipeline()
{
  auto const start = Clock::now();
  int        rc    = cli_run({"bernoulli", "--seed", "2019", "--length", "1000", "--out", file("fig.seq")});
  rc |= cli_run({"filter", "--in", file("fig.seq"), "--mu", "0.1", "--phi0", "0.5", "--t-end", "100",
                 "--dt", "0.01", "--out", file("fig.csv")});
  double const elapsed = seconds_since(start);
  if (rc != 0)
  {
    return {false, "CLI failed"};
  }
  auto const t  = read_csv_file(file("fig.csv"));
  double     lo = 1.0;
  double     hi = 0.0;
  for (double v : t.values)
  {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool const span_ok = t.size() == 10001 && t.times.front() == 0.0 && std::abs(t.times.back() - 100.0) < 1e-12;
  bool const ok      = span_ok && lo >= 0.0 && hi <= 1.0 && elapsed < 1.0;
  return {ok, fmt("min %.6f max %.6f over t in [0,100], runtime %.3f s", lo, hi, elapsed)};
}

// 2. Two initial values differ by e^{-t}; below 1e-17 at t = 50.
Outcome transient_bound()
{
  auto const   signal = StepSignal::aligned(realize(BernoulliSpec::fair(2019, 1000)), 0.1);
  FilterConfig cfg;
  auto const   zero = solve_ode(signal, cfg, 0.0, 100.0);
  auto const   one  = solve_ode(signal, cfg, 1.0, 100.0);

  bool   ok        = zero.size() == one.size();
  double worst_rel = 0.0;  // over samples where e^{-t} is resolvable in the stored values
  for (std::size_t i = 0; ok && i < zero.size(); ++i)
  {
    double const gap   = one.values[i] - zero.values[i];
    double const exact = std::exp(-zero.times[i]);
    // 1e-12 relative, plus the unit roundoff of the stored value itself.
    double const allowed = 1e-12 * exact + 0x1.0p-53 * std::abs(one.values[i]);
    ok                   = ok && std::abs(gap - exact) <= allowed;
    if (exact > 1e-3)
    {
      worst_rel = std::max(worst_rel, std::abs(gap - exact) / exact);
    }
  }
  double const gap50 = std::abs(one.values[5000] - zero.values[5000]);
  ok                 = ok && std::abs(zero.times[5000] - 50.0) < 1e-12 && gap50 < 1e-17 &&
       std::exp(-50.0) < 1e-17;
  return {ok, fmt("max rel. deviation %.2e (t<=6.9), |gap(50)| = %.2e, e^-50 = %.2e", worst_rel, gap50,
                  std::exp(-50.0))};
}

// 3. Recurrence vs. per-piece quadrature, 100 seeds.
Outcome oracle_equivalence()
{
  auto const start = Clock::now();
  bool       ok    = true;
  double     worst = 0.0;  // max of |diff| - truncation_bound
  std::size_t checks = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
  {
    double const step   = seed % 2 == 0 ? 0.1 : 1.0;
    auto const   signal = StepSignal::aligned(realize(BernoulliSpec::fair(1000 + seed, 1000)), step);
    FilterConfig cfg;
    cfg.step      = step;
    cfg.sample_dt = step / 2.0;
    auto const traj = chi_exact(signal, cfg, 0.0, signal.end(), 0.0);
    for (std::size_t i = 0; i < traj.size(); i += 7)
    {
      if (traj.times[i] < 40.0)
      {
        continue;
      }
      auto const q    = chi_quadrature(signal, cfg, traj.times[i], 40.0);
      double const d  = std::abs(q.value - traj.values[i]);
      worst           = std::max(worst, d - q.truncation_bound);
      ok              = ok && d <= q.truncation_bound + 1e-10;
      ++checks;
    }
  }
  double const elapsed = seconds_since(start);
  ok                   = ok && elapsed < 10.0 && checks > 0;
  return {ok, fmt("%.0f comparisons, max excess over truncation bound %.2e, runtime %.3f s",
                  static_cast<double>(checks), worst, elapsed)};
}

// 4. Printed family and the first 17 symbols of the point.
Outcome construction_fidelity()
{
  bool const family_ok =
      family(2).strings() == std::vector<std::string>{"00", "01", "10", "11"};

  // Hand-rolled: i^1_1 i^2_1 i^2_3 i^3_1 i^3_3 i^3_5 i^3_7
  std::string const expected = std::string("0") + "00" + "10" + "000" + "010" + "100" + "110";
  auto const        window = point_window(0, 17);
  std::string       got;
  for (Symbol s : window.symbols())
  {
    got += static_cast<char>('0' + s);
  }
  bool const ok = family_ok && got == expected;
  return {ok, "point_window(0,17) = " + got + ", expected " + expected};
}

// 5. Definition-1 witnesses on i*, and the periodic/constant controls.
Outcome sequence_witnesses()
{
  auto const     start = Clock::now();
  SequenceSearch search;
  search.half_width = 4;
  search.tolerance  = 0.0;
  search.epsilon0   = 1.0;
  search.count      = 3;

  auto const point = find_sequence_witnesses(point_window(-(1 << 15), 1 << 16), search);

  std::vector<Symbol> alt(1 << 16);
  for (std::size_t i = 0; i < alt.size(); ++i)
  {
    alt[i] = static_cast<Symbol>(i % 2);
  }
  auto const periodic = find_sequence_witnesses(SequenceWindow(Alphabet::binary(), -(1 << 15), alt), search);
  auto const constant = find_sequence_witnesses(
      SequenceWindow(Alphabet::binary(), -(1 << 15), std::vector<Symbol>(1 << 16, 1)), search);
  double const elapsed = seconds_since(start);

  bool const ok = point.verdict == Verdict::consistent && point.witnesses.size() >= 3 &&
                  periodic.verdict == Verdict::inconsistent && constant.verdict == Verdict::inconsistent &&
                  elapsed < 30.0;
  std::string detail = "i*: " + std::string(to_string(point.verdict)) + " with " +
                       std::to_string(point.witnesses.size()) + " witnesses (zeta";
  for (auto const &w : point.witnesses)
  {
    detail += " " + std::to_string(w.zeta);
  }
  detail += "); periodic: " + std::string(to_string(periodic.verdict)) +
            "; constant: " + std::string(to_string(constant.verdict)) + fmt("; runtime %.3f s", elapsed);
  return {ok, detail};
}

// 6. Separation constants, and achieved separation on chi built from i*.
Outcome separation()
{
  auto const c         = separation_constants(1.0);
  bool       ok        = c.lower_bound == 1.0 / 24.0 &&
            std::abs(c.kappa_i - std::log(1.5) / 2.0) <= 1e-15 &&
            std::abs(c.kappa_ii + std::log(11.0 / 12.0) / 2.0) <= 1e-15;

  if (cli_run({"point", "--first", "-32768", "--length", "65536", "--out", file("istar.seq")}) != 0 ||
      cli_run({"verify-fn", "--in", file("istar.seq"), "--mu", "1", "--lambda", "1", "--seq-count", "3",
               "--u-max", "4000", "--out", file("istar_fn.json")}) != 0)
  {
    return {false, "CLI failed"};
  }
  auto const report = Json::parse(slurp(file("istar_fn.json")));
  if (!report.contains("separation_check"))
  {
    return {false, "report lacks separation_check"};
  }
  double const achieved  = report["separation_check"]["achieved_separation"].get<double>();
  double const predicted = report["separation_check"]["predicted_lower_bound"].get<double>();
  ok = ok && achieved >= 0.0 && predicted == 1.0 / 24.0;
  return {ok, fmt("kappa_i %.16f kappa_ii %.16f; achieved separation %.4f", c.kappa_i, c.kappa_ii, achieved) +
                  fmt(" vs predicted eps0/24 = %.6f", predicted) + " (verdict " +
                  report["verdict"].get<std::string>() + ")"};
}

// 7. Metric axioms and expansiveness on 1000 random pairs, K = 16.
Outcome metric_properties()
{
  std::mt19937_64                      rng(7);
  std::uniform_int_distribution<Symbol> bit(0, 1);
  auto random_window = [&] {
    std::vector<Symbol> s(35);
    for (auto &x : s)
    {
      x = bit(rng);
    }
    return SequenceWindow(Alphabet::binary(), -17, std::move(s));
  };

  constexpr double tol      = 1e-12;
  std::size_t      failures = 0;
  for (int trial = 0; trial < 1000; ++trial)
  {
    auto const I = random_window();
    auto const J = random_window();
    auto const L = random_window();

    double const ij = metric_distance(I, J, 16).value;
    double const ji = metric_distance(J, I, 16).value;
    double const il = metric_distance(I, L, 16).value;
    double const lj = metric_distance(L, J, 16).value;
    double const ii = metric_distance(I, I, 16).value;

    bool agree_on_range = true;
    for (Index k = -16; k <= 16; ++k)
    {
      agree_on_range = agree_on_range && I.symbol_at(k) == J.symbol_at(k);
    }

    bool const axioms = std::abs(ij - ji) <= tol && ij <= il + lj + tol && ii == 0.0 &&
                        ((ij == 0.0) == agree_on_range) && ij >= 0.0;
    bool const expansive =
        metric_distance(shift(I), shift(J), 16).value <= 2.0 * metric_distance(I, J, 17).value + tol;
    failures += (axioms && expansive) ? 0 : 1;
  }
  return {failures == 0, std::to_string(failures) + " failures over 1000 pairs"};
}

// 8. Byte determinism of every subcommand and exact format round trips.
Outcome reproducibility()
{
  std::vector<std::vector<std::string>> invocations = {
      {"point", "--first", "-8", "--length", "17"},
      {"bernoulli", "--seed", "42", "--length", "1000"},
      {"filter", "--in", file("fig.seq")},
      {"verify-seq", "--in", file("istar.seq")},
      {"verify-fn", "--in", file("istar.seq"), "--seq-count", "2", "--u-max", "500"},
      {"metric", "--a", file("istar.seq"), "--b", file("istar.seq")},
      {"shift", "--in", file("fig.seq"), "--times", "5"},
  };
  bool        ok = true;
  std::string failed;
  for (auto const &args : invocations)
  {
    std::string a;
    std::string b;
    int const   ra = cli_run(args, &a);
    int const   rb = cli_run(args, &b);
    if (ra != 0 || rb != 0 || a != b || a.empty())
    {
      ok = false;
      failed += " " + args.front();
    }
  }

  // Round trips.
  auto const seq_text = slurp(file("fig.seq"));
  ok = ok && format_sequence(parse_sequence(seq_text)) == seq_text;
  auto const csv_text = slurp(file("fig.csv"));
  auto const traj     = parse_csv(csv_text);
  ok = ok && format_csv(traj) == csv_text;
  auto const json_text = slurp(file("istar_fn.json"));
  ok = ok && dump_report(Json::parse(json_text)) == json_text;

  BernoulliSpec spec;
  spec.alphabet      = Alphabet({-0.1, 1.0 / 3.0, 7e-300});
  spec.probabilities = {0.2, 0.3, 0.5};
  spec.seed          = 5;
  spec.length        = 300;
  auto const odd     = realize(spec);
  ok = ok && parse_sequence(format_sequence(odd)) == odd;

  return {ok, failed.empty() ? "7 subcommands byte-identical on rerun; sequence/CSV/JSON round trips exact"
                             : "non-deterministic:" + failed};
}

}  // namespace

int main()
{
  struct Criterion
  {
    char const             *name;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> const criteria = {
      {"AC1 figure pipeline bounded in [0,1], < 1 s", figure_pipeline},
      {"AC2 transient gap equals e^-t, < 1e-17 at t=50", transient_bound},
      {"AC3 recurrence vs quadrature within bound + 1e-10", oracle_equivalence},
      {"AC4 construction fidelity", construction_fidelity},
      {"AC5 sequence witnesses and controls", sequence_witnesses},
      {"AC6 separation constants and reported separation", separation},
      {"AC7 metric axioms and shift expansiveness", metric_properties},
      {"AC8 reproducibility and exact round trips", reproducibility},
  };

  int failures = 0;
  for (auto const &c : criteria)
  {
    Outcome o;
    try
    {
      o = c.check();
    }
    catch (std::exception const &e)
    {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  fs::remove_all(work_dir());
  return failures == 0 ? 0 : 1;
}
