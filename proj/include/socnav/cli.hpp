// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_CLI_HPP_
#define SOCNAV_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "socnav/backend.hpp"
#include "socnav/metrics.hpp"
#include "socnav/reasoner.hpp"
#include "socnav/scenario.hpp"

namespace socnav {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // trace --records comparison failed
  kExitConfig = 2,
  kExitBackend = 3,
  kExitIo = 4,
  kExitFixture = 5,
};

/// Which policy drives the robot. "planner" calls plan_step directly; the
/// others go through the reasoning chain.
struct BackendSpec {
  enum class Kind { kOracle, kPlanner, kRemote, kReplay };
  Kind kind = Kind::kOracle;
  std::string fixture;  // replay source
  RemoteBackendOptions remote;
  std::string label() const;
};

/// Accepts "oracle", "planner", "remote" and "replay:<path>". ConfigError otherwise.
BackendSpec parse_backend(const std::string& text);

struct RunSpec {
  std::string config_path;
  BackendSpec backend;
  int episodes = 1;
  std::uint64_t seed = 0;
  std::optional<int> humans;
  std::string out_dir = "out";
  int jobs = 1;
  std::string record_path;  // non-empty: save every backend exchange as a fixture
  std::string chain_path;   // non-empty: guidance chain JSON
  bool single_step = false;
};

struct SuiteResult {
  std::string method;
  int n_humans = 0;
  std::vector<EpisodeResult> episodes;  // seed order
  std::vector<EpisodeRecord> records;   // seed order
  MetricsReport report;
};

/// Runs seeds seed..seed+episodes-1 of `config` with up to `jobs` threads.
/// Results are stored in seed order regardless of completion order.
SuiteResult run_suite(const ScenarioConfig& config, const RunSpec& spec,
                      std::shared_ptr<FixtureRecorder> recorder = nullptr);

/// Policy for one configured backend. Throws ConfigError/FixtureError while
/// setting up (e.g. unreadable replay fixture).
Policy make_policy(const ScenarioConfig& config, const RunSpec& spec,
                   std::shared_ptr<FixtureRecorder> recorder);

/// Writes results.csv, diagnostics.csv, episodes.jsonl, traces/ and
/// manifest.json under spec.out_dir.
int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err);

struct TraceSpec {
  std::string trace_path;
  std::string plot_path;     // robot and human polylines as CSV
  std::string config_path;   // recompute metrics with these parameters
  std::string records_path;  // compare against a stored episodes.jsonl
};

int cmd_trace(const TraceSpec& spec, std::ostream& out, std::ostream& err);

struct BenchSpec {
  std::string config_path;
  std::vector<std::string> backends;
  std::vector<int> humans;
  int episodes = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_path;  // CSV; empty = stdout only
  RemoteBackendOptions remote;
};

int cmd_bench(const BenchSpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the subcommands above.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace socnav

#endif  // SOCNAV_CLI_HPP_
