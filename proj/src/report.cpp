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

#include "unpred/report.hpp"

namespace unpred {

Json sequence_report(SequenceVerdict const &verdict, SequenceSearch const &search)
{
  Json witnesses = Json::array();
  for (auto const &w : verdict.witnesses)
  {
    Json item;
    item["zeta"]             = w.zeta;
    item["eta"]              = w.eta;
    item["window"]           = Json::array({w.window_lo, w.window_hi});
    item["max_window_error"] = w.max_window_error;
    item["separation"]       = w.separation;
    witnesses.push_back(std::move(item));
  }

  Json report;
  report["verdict"]            = std::string(to_string(verdict.verdict));
  report["epsilon0_requested"] = search.epsilon0;
  report["epsilon0_achieved"]  = verdict.epsilon0_achieved;
  report["witnesses"]          = std::move(witnesses);

  Json coverage;
  coverage["first_index"]       = verdict.coverage_first;
  coverage["last_index"]        = verdict.coverage_last;
  coverage["shifts_scanned"]    = verdict.shifts_scanned;
  coverage["shifts_qualifying"] = verdict.shifts_qualifying;
  report["data_coverage"]       = std::move(coverage);

  Json params;
  params["kind"]       = "sequence";
  params["half_width"] = search.half_width;
  params["tolerance"]  = search.tolerance;
  params["count"]      = search.count;
  report["parameters"] = std::move(params);
  return report;
}

Json function_report(FunctionVerdict const &verdict, FunctionSearch const &search,
                     std::vector<double> const                 &shift_candidates,
                     std::optional<SeparationPrediction> const &prediction)
{
  Json witnesses = Json::array();
  for (auto const &w : verdict.witnesses)
  {
    Json item;
    item["t_shift"]          = w.t_shift;
    item["u_center"]         = w.u_center;
    item["sigma"]            = w.sigma;
    item["max_window_error"] = w.max_compact_error;
    item["separation"]       = w.min_separation_on_interval;
    witnesses.push_back(std::move(item));
  }

  Json report;
  report["verdict"]            = std::string(to_string(verdict.verdict));
  report["epsilon0_requested"] = search.epsilon0;
  report["epsilon0_achieved"]  = verdict.epsilon0_achieved;
  report["witnesses"]          = std::move(witnesses);

  Json coverage;
  coverage["compact"]       = Json::array({search.alpha, search.beta});
  coverage["center_range"]  = Json::array({search.u_min, search.u_max});
  coverage["sample_dt"]     = search.sample_dt;
  coverage["shifts_tested"] = shift_candidates.size();
  Json diagnostics          = Json::array();
  for (auto const &d : verdict.diagnostics)
  {
    Json item;
    item["t_shift"]           = d.t_shift;
    item["max_compact_error"] = d.max_compact_error;
    item["qualifies"]         = d.qualifies;
    item["best_separation"]   = d.qualifies ? Json(d.best_separation) : Json(nullptr);
    item["best_center"]       = d.qualifies ? Json(d.best_center) : Json(nullptr);
    diagnostics.push_back(std::move(item));
  }
  coverage["shifts"]      = std::move(diagnostics);
  report["data_coverage"] = std::move(coverage);

  Json params;
  params["kind"]      = "function";
  params["sigma"]     = search.sigma;
  params["tolerance"] = search.tolerance;
  params["count"]     = search.count;
  report["parameters"] = std::move(params);

  if (prediction)
  {
    Json check;
    check["predicted_lower_bound"] = prediction->lower_bound;
    check["kappa_i"]               = prediction->kappa_i;
    check["kappa_ii"]              = prediction->kappa_ii;
    check["achieved_separation"]   = verdict.best_separation;
    check["meets_prediction"]      = verdict.best_separation >= prediction->lower_bound;
    report["separation_check"]     = std::move(check);
  }
  return report;
}

std::string dump_report(Json const &report)
{
  return report.dump(2) + "\n";
}

}  // namespace unpred
