// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "socnav/fileio.hpp"
#include "socnav/trace.hpp"

namespace socnav {

namespace fs = std::filesystem;
using nlohmann::json;

std::string BackendSpec::label() const {
  switch (kind) {
    case Kind::kOracle: return "oracle";
    case Kind::kPlanner: return "planner";
    case Kind::kRemote: return remote.model.empty() ? "remote" : "remote:" + remote.model;
    case Kind::kReplay: return "replay";
  }
  return "oracle";
}

BackendSpec parse_backend(const std::string& text) {
  BackendSpec b;
  if (text == "oracle") {
    b.kind = BackendSpec::Kind::kOracle;
  } else if (text == "planner") {
    b.kind = BackendSpec::Kind::kPlanner;
  } else if (text == "remote") {
    b.kind = BackendSpec::Kind::kRemote;
  } else if (text.rfind("replay:", 0) == 0 && text.size() > 7) {
    b.kind = BackendSpec::Kind::kReplay;
    b.fixture = text.substr(7);
  } else {
    throw ConfigError("unknown backend '" + text + "' (oracle, planner, remote, replay:<path>)");
  }
  return b;
}

namespace {

// Maps an exception to the documented exit code and prints it.
int report_error(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const FixtureError& e) {
    err << "fixture error: " << e.what() << "\n";
    return kExitFixture;
  } catch (const TransportError& e) {
    err << "backend error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

GuidanceChain chain_for(const ScenarioConfig& config, const RunSpec& spec) {
  if (!spec.chain_path.empty()) return load_guidance_chain(spec.chain_path);
  const auto& p = config.planner;
  return spec.single_step ? build_single_step_chain(p.compliance, p.horizon_steps)
                          : build_guidance_chain(p.compliance, p.horizon_steps);
}

std::shared_ptr<ReasoningBackend> recorded(std::shared_ptr<ReasoningBackend> inner,
                                           const std::shared_ptr<FixtureRecorder>& recorder) {
  if (!recorder) return inner;
  return std::make_shared<RecordingBackend>(std::move(inner), recorder);
}

void probe_remote(const RemoteBackendOptions& options) {
  RemoteBackend backend(options);
  backend.complete("Reply with the word ready.");
}

std::string manifest_json(const RunSpec& spec, const ScenarioConfig& cfg,
                          const SuiteResult& suite) {
  std::map<std::string, int> statuses;
  int repaired = 0;
  int forced = 0;
  for (const auto& e : suite.episodes) {
    ++statuses[status_name(e.status)];
    for (const auto& s : e.steps) {
      repaired += s.repaired ? 1 : 0;
      forced += s.outcome && s.outcome->forced ? 1 : 0;
    }
  }
  json m;
  m["command"] = "run";
  m["config"] = spec.config_path;
  m["backend"] = suite.method;
  m["episodes"] = spec.episodes;
  m["seed"] = spec.seed;
  m["humans"] = spec.humans ? json(*spec.humans) : json(nullptr);
  m["jobs"] = spec.jobs;
  m["out"] = spec.out_dir;
  m["record"] = spec.record_path;
  m["chain"] = spec.chain_path;
  m["single_step"] = spec.single_step;
  if (spec.backend.kind == BackendSpec::Kind::kRemote) {
    m["endpoint"] = spec.backend.remote.endpoint;
    m["model"] = spec.backend.remote.model;
    m["token_env"] = spec.backend.remote.token_env;
  }
  if (spec.backend.kind == BackendSpec::Kind::kReplay) m["fixture"] = spec.backend.fixture;
  m["scenario"] = to_config_text(cfg);
  m["statuses"] = statuses;
  m["repaired_ticks"] = repaired;
  m["forced_ticks"] = forced;
  return m.dump(2) + "\n";
}

}  // namespace

Policy make_policy(const ScenarioConfig& config, const RunSpec& spec,
                   std::shared_ptr<FixtureRecorder> recorder) {
  if (spec.backend.kind == BackendSpec::Kind::kPlanner) {
    return planner_policy(config.planner);
  }
  BackendFactory factory;
  switch (spec.backend.kind) {
    case BackendSpec::Kind::kOracle: {
      const auto planner = config.planner;
      factory = [planner, recorder](const ObservationFrame& frame) {
        return recorded(oracle_backend(frame, planner), recorder);
      };
      break;
    }
    case BackendSpec::Kind::kReplay: {
      auto replay = std::make_shared<ReplayBackend>(spec.backend.fixture);
      factory = [replay](const ObservationFrame&) -> std::shared_ptr<ReasoningBackend> {
        return replay;
      };
      break;
    }
    case BackendSpec::Kind::kRemote: {
      const auto options = spec.backend.remote;
      factory = [options, recorder](const ObservationFrame&) {
        return recorded(std::make_shared<RemoteBackend>(options), recorder);
      };
      break;
    }
    case BackendSpec::Kind::kPlanner:
      break;
  }
  return reasoner_policy(std::move(factory), config, chain_for(config, spec));
}

SuiteResult run_suite(const ScenarioConfig& config, const RunSpec& spec,
                      std::shared_ptr<FixtureRecorder> recorder) {
  if (spec.episodes < 1) throw ConfigError("episodes must be at least 1");
  if (spec.jobs < 1) throw ConfigError("jobs must be at least 1");
  config.validate();
  const Policy policy = make_policy(config, spec, std::move(recorder));

  SuiteResult suite;
  suite.method = spec.backend.label();
  suite.n_humans = config.n_humans;
  suite.episodes.resize(static_cast<std::size_t>(spec.episodes));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < spec.episodes; i = next++) {
      ScenarioConfig c = config;
      c.seed = spec.seed + static_cast<std::uint64_t>(i);
      suite.episodes[static_cast<std::size_t>(i)] = run_episode(c, policy);
    }
  };
  const int threads = std::min(spec.jobs, spec.episodes);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : suite.episodes) {
    suite.records.push_back(episode_metrics(e, config.planner.compliance));
  }
  suite.report = aggregate(suite.records);
  return suite;
}

int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    auto cfg = load_scenario_config(spec.config_path);
    if (spec.humans) {
      cfg.n_humans = *spec.humans;
      cfg.validate();
    }
    if (spec.backend.kind == BackendSpec::Kind::kRemote) probe_remote(spec.backend.remote);
    auto recorder = spec.record_path.empty() ? nullptr : std::make_shared<FixtureRecorder>();
    const auto suite = run_suite(cfg, spec, recorder);

    const fs::path dir(spec.out_dir);
    fs::create_directories(dir / "traces");
    std::string episodes;
    for (std::size_t i = 0; i < suite.episodes.size(); ++i) {
      const auto& e = suite.episodes[i];
      write_file_atomic((dir / "traces" / ("episode_" + std::to_string(e.seed) + ".jsonl")).string(),
                        trace_text(e));
      episodes += record_to_json(suite.records[i]) + "\n";
    }
    write_file_atomic((dir / "episodes.jsonl").string(), episodes);
    const std::string results = std::string(kResultsHeader) + "\n" +
                                results_row(suite.method, suite.n_humans, suite.report) + "\n";
    write_file_atomic((dir / "results.csv").string(), results);
    write_file_atomic((dir / "diagnostics.csv").string(),
                      std::string(kDiagnosticsHeader) + "\n" +
                          diagnostics_row(suite.method, suite.n_humans, suite.report) + "\n");
    write_file_atomic((dir / "manifest.json").string(), manifest_json(spec, cfg, suite));
    if (recorder) recorder->save(spec.record_path);
    out << results;

    for (const auto& e : suite.episodes) {
      if (e.status != EpisodeStatus::kAborted) continue;
      err << "episode " << e.seed << " aborted\n";
      const int code = report_error(e.abort_error, err);
      if (code == kExitFixture || code == kExitBackend) return code;
    }
    return kExitOk;
  } catch (...) {
    return report_error(std::current_exception(), err);
  }
}

namespace {

std::string plot_csv(const std::vector<TraceRecord>& records) {
  std::ostringstream os;
  os.precision(17);
  os << "agent,tick,x,y\n";
  for (const auto& r : records) {
    os << "robot," << r.tick << "," << r.frame.robot.position.x() << ","
       << r.frame.robot.position.y() << "\n";
  }
  std::vector<int> ids;
  for (const auto& h : records.front().frame.humans) ids.push_back(h.id);
  for (int id : ids) {
    for (const auto& r : records) {
      if (const auto* h = r.frame.find_human(id)) {
        os << AgentId::human(id).name() << "," << r.tick << "," << h->position.x() << ","
           << h->position.y() << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace

int cmd_trace(const TraceSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(spec.trace_path);
    if (!in) throw IoError("cannot open trace '" + spec.trace_path + "'");
    const auto records = read_trace(in);
    const auto& last = records.back();
    out << "trace " << spec.trace_path << ": seed " << last.seed << ", " << records.size()
        << " ticks, status " << status_name(last.status) << "\n";
    std::vector<int> forced;
    int repaired = 0;
    for (const auto& r : records) {
      char line[160];
      std::snprintf(line, sizeof(line), "tick %4d  t=%7.2f  robot=(%.2f, %.2f)", r.tick, r.time,
                    r.frame.robot.position.x(), r.frame.robot.position.y());
      out << line;
      if (r.level) out << "  level=" << level_name(*r.level);
      if (r.facts) {
        out << "  Es=" << r.facts->es << " Ed=" << r.facts->ed << " ~Ec=" << r.facts->not_ec
            << " Et=" << r.facts->et;
      }
      if (r.forced) {
        out << "  FORCED";
        forced.push_back(r.tick);
      }
      if (r.repaired) {
        out << "  repaired";
        ++repaired;
      }
      out << "\n";
    }
    out << "forced ticks: " << forced.size();
    for (int t : forced) out << " " << t;
    out << "\nrepaired ticks: " << repaired << "\n";

    if (!spec.plot_path.empty()) write_file_atomic(spec.plot_path, plot_csv(records));

    if (!spec.config_path.empty()) {
      const auto cfg = load_scenario_config(spec.config_path);
      const auto rec = episode_metrics(result_from_trace(records), cfg.planner.compliance);
      out << "metrics " << record_to_json(rec) << "\n";
      if (!spec.records_path.empty()) {
        std::ifstream rin(spec.records_path);
        if (!rin) throw IoError("cannot open records '" + spec.records_path + "'");
        std::string line;
        int n = 0;
        while (std::getline(rin, line)) {
          ++n;
          if (line.empty()) continue;
          EpisodeRecord stored;
          try {
            stored = record_from_json(line);
          } catch (const ParseError& e) {
            throw ParseError(e.what(), n);
          }
          if (stored.seed != rec.seed) continue;
          if (stored == rec) {
            out << "metrics match stored record\n";
            return kExitOk;
          }
          out << "metrics differ from stored record " << line << "\n";
          return kExitMismatch;
        }
        err << "no stored record for seed " << rec.seed << "\n";
        return kExitMismatch;
      }
    }
    return kExitOk;
  } catch (...) {
    return report_error(std::current_exception(), err);
  }
}

int cmd_bench(const BenchSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const auto base = load_scenario_config(spec.config_path);
    if (spec.backends.empty() || spec.humans.empty()) {
      throw ConfigError("bench needs at least one backend and one crowd size");
    }
    std::string csv = std::string(kResultsHeader) + "\n";
    out << kResultsHeader << "\n";
    for (const auto& name : spec.backends) {
      for (int n : spec.humans) {
        std::string row;
        std::string label = name;
        try {
          RunSpec run;
          run.backend = parse_backend(name);
          run.backend.remote = spec.remote;
          label = run.backend.label();
          run.episodes = spec.episodes;
          run.seed = spec.seed;
          run.jobs = spec.jobs;
          ScenarioConfig cfg = base;
          cfg.n_humans = n;
          const auto suite = run_suite(cfg, run);
          for (const auto& e : suite.episodes) {
            if (e.status == EpisodeStatus::kAborted) {
              throw StateError("episode " + std::to_string(e.seed) + " aborted: " + e.abort_reason);
            }
          }
          row = results_row(label, n, suite.report);
        } catch (const std::exception& e) {
          err << "cell " << label << " x " << n << " failed: " << e.what() << "\n";
          row = error_row(label, n);
        }
        out << row << "\n";
        csv += row + "\n";
      }
    }
    if (!spec.out_path.empty()) write_file_atomic(spec.out_path, csv);
    return kExitOk;
  } catch (...) {
    return report_error(std::current_exception(), err);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Socially-aware navigation with verified constraint levels"};
  app.require_subcommand(1);

  RunSpec run;
  std::string run_backend = "oracle";
  int run_humans = 0;
  auto* run_cmd = app.add_subcommand("run", "Run a seeded episode suite");
  run_cmd->add_option("--config", run.config_path, "Scenario config file")->required();
  run_cmd->add_option("--backend", run_backend, "oracle | planner | remote | replay:<path>");
  run_cmd->add_option("--episodes", run.episodes, "Number of episodes");
  run_cmd->add_option("--seed", run.seed, "First seed");
  auto* humans_opt = run_cmd->add_option("--humans", run_humans, "Override n_humans");
  run_cmd->add_option("--out", run.out_dir, "Output directory");
  run_cmd->add_option("--jobs", run.jobs, "Parallel episodes");
  run_cmd->add_option("--record", run.record_path, "Save backend exchanges as a replay fixture");
  run_cmd->add_option("--chain", run.chain_path, "Guidance chain JSON");
  run_cmd->add_flag("--single-step", run.single_step, "Ask for the action in one query");

  RemoteBackendOptions remote;
  run_cmd->add_option("--endpoint", remote.endpoint, "Chat-completion URL");
  run_cmd->add_option("--model", remote.model, "Remote model name");
  run_cmd->add_option("--token-env", remote.token_env, "Variable holding the bearer token");
  run_cmd->add_option("--timeout", remote.timeout_seconds, "Request timeout in seconds");

  TraceSpec trace;
  auto* trace_cmd = app.add_subcommand("trace", "Summarize an episode trace");
  trace_cmd->add_option("trace", trace.trace_path, "Trace file (JSON Lines)")->required();
  trace_cmd->add_option("--plot", trace.plot_path, "Write polylines as CSV");
  trace_cmd->add_option("--config", trace.config_path, "Recompute metrics with this config");
  trace_cmd->add_option("--records", trace.records_path, "Compare with stored episodes.jsonl")
      ->needs(trace_cmd->get_option("--config"));

  BenchSpec bench;
  auto* bench_cmd = app.add_subcommand("bench", "Backend x crowd-size results table");
  bench_cmd->add_option("--config", bench.config_path, "Scenario config file")->required();
  bench_cmd->add_option("--backends", bench.backends, "Comma-separated backends")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--humans", bench.humans, "Comma-separated crowd sizes")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--episodes", bench.episodes, "Episodes per cell");
  bench_cmd->add_option("--seed", bench.seed, "First seed");
  bench_cmd->add_option("--jobs", bench.jobs, "Parallel episodes");
  bench_cmd->add_option("--out", bench.out_path, "Results CSV path");
  bench_cmd->add_option("--endpoint", bench.remote.endpoint, "Chat-completion URL");
  bench_cmd->add_option("--model", bench.remote.model, "Remote model name");
  bench_cmd->add_option("--token-env", bench.remote.token_env, "Variable holding the bearer token");
  bench_cmd->add_option("--timeout", bench.remote.timeout_seconds, "Request timeout in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (run_cmd->parsed()) {
    try {
      run.backend = parse_backend(run_backend);
    } catch (const ConfigError& e) {
      err << "config error: " << e.what() << "\n";
      return kExitConfig;
    }
    run.backend.remote = remote;
    if (humans_opt->count() > 0) run.humans = run_humans;
    return cmd_run(run, out, err);
  }
  if (trace_cmd->parsed()) return cmd_trace(trace, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace socnav
