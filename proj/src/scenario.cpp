// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/scenario.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "socnav/errors.hpp"

namespace socnav {

std::map<std::string, double> ScenarioConfig::default_activity_weights() {
  return {{"walking", 0.5}, {"talking", 0.15}, {"standing", 0.15},
          {"sitting", 0.1}, {"phone", 0.1}};
}

const char* spawn_rule_name(SpawnRule rule) {
  return rule == SpawnRule::kCircleCrossing ? "circle_crossing" : "random";
}

const char* human_policy_name(HumanPolicy policy) {
  return policy == HumanPolicy::kConstantVelocityWaypoint ? "constant_velocity_waypoint"
                                                          : "social_force_lite";
}

void ScenarioConfig::validate() const {
  if (n_humans < 0) throw ConfigError("n_humans must be >= 0");
  if (!(arena_width > 0.0) || !(arena_height > 0.0)) throw ConfigError("arena must be non-empty");
  auto inside = [&](const Vec2d& p) {
    return std::abs(p.x()) <= arena_width / 2 && std::abs(p.y()) <= arena_height / 2;
  };
  if (!robot_start.allFinite() || !inside(robot_start)) {
    throw ConfigError("robot start must lie inside the arena");
  }
  if (!robot_goal.allFinite() || !inside(robot_goal)) {
    throw ConfigError("goal must lie inside the arena");
  }
  if (!(goal_radius > 0.0)) throw ConfigError("goal_radius must be positive");
  if (!(robot_radius > 0.0) || !(human_radius > 0.0)) throw ConfigError("radii must be positive");
  if (!(circle_radius > 0.0)) throw ConfigError("circle_radius must be positive");
  if (!(human_speed >= 0.0)) throw ConfigError("human_speed must be >= 0");
  if (activity_switch_interval < 0) throw ConfigError("activity_switch_interval must be >= 0");
  double total = 0.0;
  for (const auto& [name, w] : activity_weights) {
    if (!(w >= 0.0)) throw ConfigError("activity weight for '" + name + "' must be >= 0");
    total += w;
  }
  if (n_humans > 0 && !(total > 0.0)) throw ConfigError("activity weights sum to zero");
  planner.validate();
  for (const auto& [name, w] : activity_weights) {
    if (w > 0.0) planner.compliance.pref(Activity(name));
  }
}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError("expected a number, got '" + v + "'");
  }
  return out;
}

long long to_integer(const std::string& v) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("expected an integer, got '" + v + "'");
  }
  return out;
}

std::vector<double> to_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(to_double(trim(item)));
  }
  return out;
}

Vec2d to_point(const std::string& v) {
  const auto xs = to_list(v);
  if (xs.size() != 2) throw ConfigError("expected 'x, y', got '" + v + "'");
  return {xs[0], xs[1]};
}

bool to_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected a boolean, got '" + v + "'");
}

// Shortest text that parses back to the same double.
std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string number_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += number(xs[i]);
  }
  return out;
}

using Setter = std::function<void(ScenarioConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> kSetters = {
      {"n_humans", [](auto& c, const auto& v) { c.n_humans = static_cast<int>(to_integer(v)); }},
      {"arena_width", [](auto& c, const auto& v) { c.arena_width = to_double(v); }},
      {"arena_height", [](auto& c, const auto& v) { c.arena_height = to_double(v); }},
      {"robot_start", [](auto& c, const auto& v) { c.robot_start = to_point(v); }},
      {"robot_goal", [](auto& c, const auto& v) { c.robot_goal = to_point(v); }},
      {"spawn_rule",
       [](auto& c, const auto& v) {
         if (v == "circle_crossing") c.spawn_rule = SpawnRule::kCircleCrossing;
         else if (v == "random") c.spawn_rule = SpawnRule::kRandom;
         else throw ConfigError("unknown spawn_rule '" + v + "'");
       }},
      {"human_policy",
       [](auto& c, const auto& v) {
         if (v == "constant_velocity_waypoint") c.human_policy = HumanPolicy::kConstantVelocityWaypoint;
         else if (v == "social_force_lite") c.human_policy = HumanPolicy::kSocialForceLite;
         else throw ConfigError("unknown human_policy '" + v + "'");
       }},
      {"seed", [](auto& c, const auto& v) { c.seed = static_cast<std::uint64_t>(to_integer(v)); }},
      {"dt", [](auto& c, const auto& v) { c.planner.compliance.dt = to_double(v); }},
      {"T_max", [](auto& c, const auto& v) { c.planner.compliance.t_max = to_double(v); }},
      {"d_min", [](auto& c, const auto& v) { c.planner.compliance.d_min = to_double(v); }},
      {"max_speed", [](auto& c, const auto& v) { c.planner.compliance.max_speed = to_double(v); }},
      {"goal_radius", [](auto& c, const auto& v) { c.goal_radius = to_double(v); }},
      {"robot_radius", [](auto& c, const auto& v) { c.robot_radius = to_double(v); }},
      {"human_radius", [](auto& c, const auto& v) { c.human_radius = to_double(v); }},
      {"circle_radius", [](auto& c, const auto& v) { c.circle_radius = to_double(v); }},
      {"human_speed", [](auto& c, const auto& v) { c.human_speed = to_double(v); }},
      {"activity_switch_interval",
       [](auto& c, const auto& v) { c.activity_switch_interval = static_cast<int>(to_integer(v)); }},
      {"task", [](auto& c, const auto& v) { c.task_label = v; }},
      {"horizon_steps",
       [](auto& c, const auto& v) { c.planner.horizon_steps = static_cast<int>(to_integer(v)); }},
      {"action_speeds", [](auto& c, const auto& v) { c.planner.space.speeds = to_list(v); }},
      {"action_headings",
       [](auto& c, const auto& v) {
         c.planner.space.headings = ActionSpace::even_headings(static_cast<int>(to_integer(v)));
       }},
      {"action_stop", [](auto& c, const auto& v) { c.planner.space.includes_stop = to_bool(v); }},
  };
  return kSetters;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool weights_reset = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key.rfind("pref.", 0) == 0) {
        // Overrides one entry of the default table or adds a custom activity.
        cfg.planner.compliance.pref_table[Activity(key.substr(5)).name()] = to_double(value);
      } else if (key.rfind("activity_weight.", 0) == 0) {
        // The first weight line replaces the default mix.
        if (!weights_reset) {
          cfg.activity_weights.clear();
          weights_reset = true;
        }
        cfg.activity_weights[Activity(key.substr(16)).name()] = to_double(value);
      } else {
        auto it = setters().find(key);
        if (it == setters().end()) throw ConfigError("unknown key '" + key + "'");
        it->second(cfg, value);
      }
    } catch (const Error& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario config '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_config(buf.str());
}

std::string to_config_text(const ScenarioConfig& c) {
  const auto& p = c.planner.compliance;
  std::ostringstream os;
  os << "n_humans = " << c.n_humans << "\n"
     << "arena_width = " << number(c.arena_width) << "\n"
     << "arena_height = " << number(c.arena_height) << "\n"
     << "robot_start = " << number(c.robot_start.x()) << ", " << number(c.robot_start.y()) << "\n"
     << "robot_goal = " << number(c.robot_goal.x()) << ", " << number(c.robot_goal.y()) << "\n"
     << "spawn_rule = " << spawn_rule_name(c.spawn_rule) << "\n"
     << "human_policy = " << human_policy_name(c.human_policy) << "\n"
     << "seed = " << c.seed << "\n"
     << "dt = " << number(p.dt) << "\n"
     << "T_max = " << number(p.t_max) << "\n"
     << "d_min = " << number(p.d_min) << "\n"
     << "max_speed = " << number(p.max_speed) << "\n"
     << "goal_radius = " << number(c.goal_radius) << "\n"
     << "robot_radius = " << number(c.robot_radius) << "\n"
     << "human_radius = " << number(c.human_radius) << "\n"
     << "circle_radius = " << number(c.circle_radius) << "\n"
     << "human_speed = " << number(c.human_speed) << "\n"
     << "activity_switch_interval = " << c.activity_switch_interval << "\n"
     << "task = " << c.task_label << "\n"
     << "horizon_steps = " << c.planner.horizon_steps << "\n"
     << "action_speeds = " << number_list(c.planner.space.speeds) << "\n"
     << "action_headings = " << c.planner.space.headings.size() << "\n"
     << "action_stop = " << (c.planner.space.includes_stop ? "true" : "false") << "\n";
  for (const auto& [name, d] : p.pref_table) {
    os << "pref." << name << " = " << number(d) << "\n";
  }
  for (const auto& [name, w] : c.activity_weights) {
    os << "activity_weight." << name << " = " << number(w) << "\n";
  }
  return os.str();
}

}  // namespace socnav
