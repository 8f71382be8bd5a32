// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/trace.hpp"

#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "socnav/errors.hpp"

namespace socnav {

using nlohmann::json;

namespace {

json point(const Vec2d& p) { return json::array({p.x(), p.y()}); }

Vec2d to_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json tick_json(const EpisodeResult& r, std::size_t t) {
  const auto& f = r.trajectory[t];
  const bool terminal = t + 1 == r.trajectory.size();
  json humans = json::array();
  for (const auto& h : f.humans) {
    humans.push_back({{"id", h.id},
                      {"p", point(h.position)},
                      {"v", point(h.velocity)},
                      {"radius", h.radius},
                      {"activity", h.activity.name()}});
  }
  json j = {
      {"tick", t},
      {"time", f.time},
      {"dt", r.dt},
      {"seed", r.seed},
      {"status", status_name(terminal ? r.status : EpisodeStatus::kRunning)},
      {"robot",
       {{"p", point(f.robot.position)},
        {"v", point(f.robot.velocity)},
        {"radius", f.robot.radius},
        {"goal", point(f.robot.goal)}}},
      {"humans", humans},
      {"action", nullptr},
      {"level", nullptr},
      {"predicate_vector", nullptr},
      {"forced", false},
      {"repaired", false},
      {"verified", false},
      {"proof", nullptr},
  };
  if (t < r.steps.size()) {
    const auto& s = r.steps[t];
    j["action"] = {{"index", s.action.index}, {"v", point(s.action.velocity)}};
    j["repaired"] = s.repaired;
    if (s.outcome) {
      const auto& o = *s.outcome;
      j["level"] = level_name(o.level);
      j["predicate_vector"] = {
          {"es", o.facts.es}, {"ed", o.facts.ed}, {"not_ec", o.facts.not_ec}, {"et", o.facts.et}};
      j["forced"] = o.forced;
      j["verified"] = o.verified;
      j["proof"] = o.tree.serialize();
    }
  }
  return j;
}

TraceRecord parse_record(const json& j) {
  TraceRecord rec;
  rec.tick = j.at("tick").get<int>();
  rec.time = j.at("time").get<double>();
  rec.dt = j.at("dt").get<double>();
  rec.seed = j.at("seed").get<std::uint64_t>();
  rec.status = parse_status(j.at("status").get<std::string>());
  const auto& robot = j.at("robot");
  rec.frame.time = rec.time;
  rec.frame.robot.position = to_point(robot.at("p"));
  rec.frame.robot.velocity = to_point(robot.at("v"));
  rec.frame.robot.radius = robot.at("radius").get<double>();
  rec.frame.robot.goal = to_point(robot.at("goal"));
  rec.frame.robot.elapsed_time = rec.time;
  for (const auto& h : j.at("humans")) {
    HumanVertex v;
    v.id = h.at("id").get<int>();
    v.position = to_point(h.at("p"));
    v.velocity = to_point(h.at("v"));
    v.radius = h.at("radius").get<double>();
    v.activity = Activity(h.at("activity").get<std::string>());
    rec.frame.humans.push_back(std::move(v));
  }
  if (!j.at("action").is_null()) {
    const auto& a = j["action"];
    rec.action = CandidateAction{to_point(a.at("v")), a.at("index").get<int>()};
  }
  if (!j.at("level").is_null()) {
    rec.level = parse_level(j["level"].get<std::string>());
  }
  if (!j.at("predicate_vector").is_null()) {
    const auto& p = j["predicate_vector"];
    rec.facts = PredicateVector{p.at("es").get<bool>(), p.at("ed").get<bool>(),
                                p.at("not_ec").get<bool>(), p.at("et").get<bool>()};
  }
  rec.forced = j.at("forced").get<bool>();
  rec.repaired = j.at("repaired").get<bool>();
  rec.verified = j.at("verified").get<bool>();
  if (!j.at("proof").is_null()) rec.proof = j["proof"].get<std::string>();
  return rec;
}

}  // namespace

void write_trace(std::ostream& out, const EpisodeResult& result) {
  for (std::size_t t = 0; t < result.trajectory.size(); ++t) {
    out << tick_json(result, t).dump() << "\n";
  }
}

std::string trace_text(const EpisodeResult& result) {
  std::ostringstream os;
  write_trace(os, result);
  return os.str();
}

std::vector<TraceRecord> read_trace(std::istream& in) {
  std::vector<TraceRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_record(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError(e.what(), line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (out.back().tick != static_cast<int>(out.size()) - 1) {
      throw ParseError("ticks must be consecutive from 0", line_no);
    }
  }
  if (out.empty()) {
    throw ParseError("trace is empty");
  }
  return out;
}

EpisodeResult result_from_trace(const std::vector<TraceRecord>& records) {
  EpisodeResult r;
  if (records.empty()) return r;
  r.seed = records.front().seed;
  r.dt = records.front().dt;
  r.status = records.back().status;
  for (const auto& rec : records) {
    r.trajectory.push_back(rec.frame);
    if (rec.action) {
      StepRecord s;
      s.action = *rec.action;
      s.repaired = rec.repaired;
      r.steps.push_back(s);
    }
  }
  return r;
}

}  // namespace socnav
