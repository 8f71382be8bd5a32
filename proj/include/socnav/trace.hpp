// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_TRACE_HPP_
#define SOCNAV_TRACE_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "socnav/simulator.hpp"

namespace socnav {

/// One tick of an episode trace. The action fields describe the command
/// issued at this tick; they are empty on the terminal tick.
struct TraceRecord {
  int tick = 0;
  double time = 0.0;
  double dt = 0.0;
  std::uint64_t seed = 0;
  EpisodeStatus status = EpisodeStatus::kRunning;
  ObservationFrame frame;
  std::optional<CandidateAction> action;
  std::optional<ComplianceLevel> level;
  std::optional<PredicateVector> facts;
  bool forced = false;
  bool repaired = false;
  bool verified = false;
  std::string proof;
};

/// JSON Lines, one object per tick:
/// {tick, time, dt, seed, status, robot{p,v,radius,goal}, humans[{id,p,v,radius,activity}],
///  action{index,v}|null, level|null, predicate_vector{es,ed,not_ec,et}|null,
///  forced, repaired, verified, proof|null}
void write_trace(std::ostream& out, const EpisodeResult& result);
std::string trace_text(const EpisodeResult& result);

/// ParseError carrying the 1-based line number on malformed input.
std::vector<TraceRecord> read_trace(std::istream& in);

/// Rebuilds the parts of an EpisodeResult the metrics need.
EpisodeResult result_from_trace(const std::vector<TraceRecord>& records);

}  // namespace socnav

#endif  // SOCNAV_TRACE_HPP_
