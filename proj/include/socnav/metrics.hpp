// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_METRICS_HPP_
#define SOCNAV_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "socnav/constraints.hpp"
#include "socnav/simulator.hpp"

namespace socnav {

struct EpisodeRecord {
  std::uint64_t seed = 0;
  EpisodeStatus status = EpisodeStatus::kRunning;
  bool success = false;
  double np = 0.0;  // robot path length, m
  double nt = 0.0;  // terminal tick * dt, s
  int uf = 0;       // ticks with some human inside the d_min zone
  int ha = 0;       // ticks with some human inside its activity zone
  int ticks = 0;    // terminal tick
  double straight_line = 0.0;  // start-to-goal distance, m

  bool operator==(const EpisodeRecord&) const = default;
};

EpisodeRecord episode_metrics(const EpisodeResult& result, const ComplianceParams& params);

struct MetricsReport {
  double sr = 0.0;
  std::optional<double> np;  // successes only
  std::optional<double> nt;
  double uf = 0.0;  // mean per episode
  double ha = 0.0;
  int n_episodes = 0;
  // Diagnostics: means over failed episodes, never mixed into np/nt.
  std::optional<double> np_failed;
  std::optional<double> nt_failed;
};

/// InputError on an empty record list.
MetricsReport aggregate(std::span<const EpisodeRecord> records);

inline constexpr const char* kResultsHeader = "method,n_humans,SR,NP,NT,UF,HA,episodes";
inline constexpr const char* kUndefinedMarker = "NA";

/// One CSV row matching kResultsHeader (no newline).
std::string results_row(const std::string& method, int n_humans, const MetricsReport& report);
/// Row for a bench cell that failed to run.
std::string error_row(const std::string& method, int n_humans);
/// Header `method,n_humans,NP_failed,NT_failed,episodes` row.
std::string diagnostics_row(const std::string& method, int n_humans, const MetricsReport& report);
inline constexpr const char* kDiagnosticsHeader = "method,n_humans,NP_failed,NT_failed,episodes";

std::string record_to_json(const EpisodeRecord& record);
EpisodeRecord record_from_json(const std::string& line);

}  // namespace socnav

#endif  // SOCNAV_METRICS_HPP_
