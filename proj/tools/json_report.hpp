#pragma once

#include <cmath>

#include <json.hpp>

#include "hyperchrom/experiment.hpp"
#include "hyperchrom/pipeline.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/theory.hpp"
#include "hyperchrom/validation.hpp"

namespace hyperchrom::cli {

using nlohmann::json;

inline json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json to_json(const theory::TheoryReport& rep) {
  return {{"r", rep.r},
          {"d", rep.d},
          {"eps", rep.eps},
          {"c", rep.c},
          {"z2", finite_or_null(rep.z2)},
          {"z1", finite_or_null(rep.z1)},
          {"fm_value", finite_or_null(rep.fm_value)},
          {"in_range", rep.in_range},
          {"certified", rep.certified},
          {"chi_pred", rep.chi_pred},
          {"alpha_frac_pred", rep.alpha_frac_pred}};
}

inline json to_json(const DegreeDiagnostics& diag) {
  return {{"s0", diag.s0},
          {"s1", diag.s1},
          {"s2", diag.s2},
          {"m", diag.m},
          {"M", diag.M},
          {"loops_removed", diag.loops_removed},
          {"multiedges_removed", diag.multiedges_removed},
          {"parts_trimmed", diag.parts_trimmed}};
}

inline json to_json(const PipelineResult& res) {
  return {{"m", res.m},
          {"M", res.M},
          {"colors_initial", res.colors_initial},
          {"profile_initial_ok", res.profile_initial_ok},
          {"created_bad", res.created_bad},
          {"bad_edges", res.bad_edges},
          {"u", res.u},
          {"degeneracy_u", res.degeneracy_u},
          {"delta", res.delta},
          {"colors_final", res.colors_final},
          {"profile_ok", res.profile_ok},
          {"proper", res.proper},
          {"status", std::string(to_string(res.status))},
          {"failure", res.failure}};
}

inline json to_json(const ExperimentRecord& rec, bool with_timing) {
  json j = {{"trial", rec.trial},
            {"seed", rec.seed},
            {"n", rec.n},
            {"r", rec.r},
            {"d", rec.d},
            {"eps", rec.eps},
            {"M", rec.M},
            {"colors_initial", rec.colors_initial},
            {"bad_edges", rec.bad_edges},
            {"u", rec.u},
            {"delta", rec.delta},
            {"colors_final", rec.colors_final},
            {"alpha_greedy", rec.alpha_greedy},
            {"chi_pred", rec.chi_pred},
            {"alpha_pred", rec.alpha_pred},
            {"ratio_chi", rec.ratio_chi},
            {"ratio_alpha", rec.ratio_alpha},
            {"status", std::string(to_string(rec.status))}};
  j["runtime_ms"] = with_timing ? json(rec.runtime_ms) : json(nullptr);
  if (!rec.message.empty()) j["message"] = rec.message;
  return j;
}

inline json to_json(const RatioStats& s) {
  return {{"mean", s.mean}, {"min", s.min}, {"max", s.max}};
}

inline json to_json(const ExperimentSummary& s) {
  return {{"trials", s.trials},
          {"ok", s.ok},
          {"ratio_chi", to_json(s.ratio_chi)},
          {"ratio_alpha", to_json(s.ratio_alpha)}};
}

inline json to_json(const ChiSquareResult& chi) {
  return {{"statistic", chi.statistic}, {"df", chi.df}, {"p_value", chi.p_value}};
}

inline json to_json(const UniformityCheck& c) {
  return {{"mode", c.mode},
          {"cells", c.cells},
          {"samples", c.samples},
          {"chi_square", to_json(c.chi)},
          {"total_variation", c.total_variation},
          {"passed", c.passed}};
}

inline json to_json(const QkValidation& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    json probs = json::array();
    for (const auto& q : c.computed) probs.push_back(q.str());
    checks.push_back({{"r", c.r}, {"a", c.a}, {"q", probs}, {"match", c.match}});
  }
  json j = {{"checks", checks}, {"passed", v.passed}};
  if (!v.passed) j["first_mismatch"] = v.first_mismatch;
  return j;
}

inline json to_json(const LoopValidation& v) {
  return {{"trials", v.trials},
          {"m", v.m},
          {"mean_loops", v.mean_loops},
          {"expected_loops", v.expected_loops},
          {"relative_error", v.relative_error},
          {"multiedges_total", v.multiedges_total},
          {"passed", v.passed}};
}

inline json to_json(const OracleReport& r) {
  return {{"cases", r.cases},
          {"checks", r.checks},
          {"failures", r.failures},
          {"messages", r.messages}};
}

}  // namespace hyperchrom::cli
