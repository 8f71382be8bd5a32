// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/metrics.hpp"

#include <nlohmann/json.hpp>

#include "socnav/errors.hpp"
#include "socnav/world_model.hpp"

namespace socnav {

EpisodeRecord episode_metrics(const EpisodeResult& result, const ComplianceParams& params) {
  EpisodeRecord rec;
  rec.seed = result.seed;
  rec.status = result.status;
  rec.success = result.status == EpisodeStatus::kSuccess;
  rec.ticks = result.terminal_tick();
  rec.nt = rec.ticks * result.dt;
  if (result.trajectory.empty()) {
    return rec;
  }
  const auto& first = result.trajectory.front().robot;
  rec.straight_line = distance(first.position, first.goal);
  for (std::size_t t = 1; t < result.trajectory.size(); ++t) {
    rec.np += distance(result.trajectory[t].robot.position,
                       result.trajectory[t - 1].robot.position);
  }
  for (const auto& frame : result.trajectory) {
    bool uncomfortable = false;
    bool activity_violation = false;
    for (const auto& h : frame.humans) {
      const double d = distance(frame.robot.position, h.position);
      const double radii = frame.robot.radius + h.radius;
      uncomfortable = uncomfortable || d < params.d_min + radii;
      activity_violation = activity_violation || d < params.pref(h.activity) + radii;
    }
    rec.uf += uncomfortable ? 1 : 0;
    rec.ha += activity_violation ? 1 : 0;
  }
  return rec;
}

MetricsReport aggregate(std::span<const EpisodeRecord> records) {
  if (records.empty()) {
    throw InputError("cannot aggregate zero episodes");
  }
  MetricsReport r;
  r.n_episodes = static_cast<int>(records.size());
  int successes = 0;
  double np_ok = 0.0, nt_ok = 0.0, np_bad = 0.0, nt_bad = 0.0;
  double uf = 0.0, ha = 0.0;
  for (const auto& rec : records) {
    if (rec.success) {
      ++successes;
      np_ok += rec.np;
      nt_ok += rec.nt;
    } else {
      np_bad += rec.np;
      nt_bad += rec.nt;
    }
    uf += rec.uf;
    ha += rec.ha;
  }
  const int failures = r.n_episodes - successes;
  r.sr = static_cast<double>(successes) / r.n_episodes;
  if (successes > 0) {
    r.np = np_ok / successes;
    r.nt = nt_ok / successes;
  }
  if (failures > 0) {
    r.np_failed = np_bad / failures;
    r.nt_failed = nt_bad / failures;
  }
  r.uf = uf / r.n_episodes;
  r.ha = ha / r.n_episodes;
  return r;
}

namespace {

std::string maybe(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string(kUndefinedMarker);
}

}  // namespace

std::string results_row(const std::string& method, int n_humans, const MetricsReport& r) {
  return method + "," + std::to_string(n_humans) + "," + format_number(r.sr) + "," + maybe(r.np) +
         "," + maybe(r.nt) + "," + format_number(r.uf) + "," + format_number(r.ha) + "," +
         std::to_string(r.n_episodes);
}

std::string error_row(const std::string& method, int n_humans) {
  return method + "," + std::to_string(n_humans) + ",ERROR,ERROR,ERROR,ERROR,ERROR,0";
}

std::string diagnostics_row(const std::string& method, int n_humans, const MetricsReport& r) {
  return method + "," + std::to_string(n_humans) + "," + maybe(r.np_failed) + "," +
         maybe(r.nt_failed) + "," + std::to_string(r.n_episodes);
}

std::string record_to_json(const EpisodeRecord& rec) {
  nlohmann::json j = {{"seed", rec.seed},       {"status", status_name(rec.status)},
                      {"success", rec.success}, {"np", rec.np},
                      {"nt", rec.nt},           {"uf", rec.uf},
                      {"ha", rec.ha},           {"ticks", rec.ticks},
                      {"straight_line", rec.straight_line}};
  return j.dump();
}

EpisodeRecord record_from_json(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    EpisodeRecord rec;
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.status = parse_status(j.at("status").get<std::string>());
    rec.success = j.at("success").get<bool>();
    rec.np = j.at("np").get<double>();
    rec.nt = j.at("nt").get<double>();
    rec.uf = j.at("uf").get<int>();
    rec.ha = j.at("ha").get<int>();
    rec.ticks = j.at("ticks").get<int>();
    rec.straight_line = j.at("straight_line").get<double>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad episode record: ") + e.what());
  }
}

}  // namespace socnav
