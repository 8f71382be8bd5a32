// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "socnav/errors.hpp"
#include "socnav/planner.hpp"

namespace socnav {

const char* status_name(EpisodeStatus status) {
  switch (status) {
    case EpisodeStatus::kRunning: return "running";
    case EpisodeStatus::kSuccess: return "success";
    case EpisodeStatus::kCollision: return "collision";
    case EpisodeStatus::kTimeout: return "timeout";
    case EpisodeStatus::kAborted: return "aborted";
  }
  return "aborted";
}

EpisodeStatus parse_status(const std::string& text) {
  for (auto s : {EpisodeStatus::kRunning, EpisodeStatus::kSuccess, EpisodeStatus::kCollision,
                 EpisodeStatus::kTimeout, EpisodeStatus::kAborted}) {
    if (text == status_name(s)) return s;
  }
  throw ParseError("unknown episode status '" + text + "'");
}

bool is_stationary(const Activity& activity) {
  return activity == Activity::talking() || activity == Activity::standing() ||
         activity == Activity::sitting();
}

namespace {

constexpr double kSpawnMargin = 0.2;
constexpr int kSpawnAttempts = 1000;
constexpr int kCollisionSubsteps = 4;

double preferred_speed(const ScenarioConfig& cfg, const Activity& a) {
  if (is_stationary(a)) return 0.0;
  return a == Activity::phone() ? 0.5 * cfg.human_speed : cfg.human_speed;
}

Activity draw_activity(const ScenarioConfig& cfg, std::mt19937_64& rng) {
  std::vector<std::string> names;
  std::vector<double> weights;
  for (const auto& [name, w] : cfg.activity_weights) {
    names.push_back(name);
    weights.push_back(w);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return Activity(names[pick(rng)]);
}

struct Disc {
  Vec2d centre;
  double radius;
};

bool clear_of(const Vec2d& p, double radius, const std::vector<Disc>& discs) {
  return std::all_of(discs.begin(), discs.end(), [&](const Disc& d) {
    return distance(p, d.centre) >= radius + d.radius + kSpawnMargin;
  });
}

Vec2d uniform_in_disc(double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double theta = 2.0 * std::numbers::pi * unit(rng);
  return r * unit_heading(theta);
}

Vec2d uniform_in_arena(const ScenarioConfig& cfg, double inset, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(-cfg.arena_width / 2 + inset, cfg.arena_width / 2 - inset);
  std::uniform_real_distribution<double> uy(-cfg.arena_height / 2 + inset,
                                            cfg.arena_height / 2 - inset);
  const double x = ux(rng);
  return {x, uy(rng)};
}

Vec2d heading_velocity(const Vec2d& from, const Vec2d& to, double speed) {
  const Vec2d d = to - from;
  const double n = d.norm();
  return n > 1e-9 ? Vec2d(d * (speed / n)) : Vec2d::Zero();
}

// Velocity each human will hold during the coming tick.
Points2d human_velocities(const ScenarioConfig& cfg, EpisodeState& s) {
  const double dt = cfg.dt();
  auto& humans = s.frame.humans;
  const auto n = static_cast<Eigen::Index>(humans.size());
  Points2d vel(2, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto& h = humans[static_cast<std::size_t>(i)];
    auto& plan = s.plans[static_cast<std::size_t>(i)];
    const double v0 = preferred_speed(cfg, h.activity);
    if (v0 <= 0.0) {
      vel.col(i).setZero();
      continue;
    }
    if (distance(h.position, plan.waypoint) <= std::max(v0 * dt, 0.05)) {
      std::swap(plan.origin, plan.waypoint);  // shuttle back and forth
    }
    Vec2d desired = heading_velocity(h.position, plan.waypoint, v0);
    if (cfg.human_policy == HumanPolicy::kSocialForceLite) {
      constexpr double kRelaxation = 0.5;
      constexpr double kStrength = 2.0;
      constexpr double kRange = 0.3;
      Vec2d force = (desired - h.velocity) / kRelaxation;
      auto repel = [&](const Vec2d& other, double other_radius) {
        const Vec2d d = h.position - other;
        const double dist = d.norm();
        if (dist < 1e-9) return;
        force += kStrength * std::exp((h.radius + other_radius - dist) / kRange) * d / dist;
      };
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i) {
          const auto& o = humans[static_cast<std::size_t>(j)];
          repel(o.position, o.radius);
        }
      }
      repel(s.frame.robot.position, s.frame.robot.radius);
      Vec2d v = h.velocity + force * dt;
      const double cap = 1.3 * v0;
      if (v.norm() > cap) v *= cap / v.norm();
      desired = v;
    }
    vel.col(i) = desired;
  }
  return vel;
}

}  // namespace

EpisodeState spawn_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  EpisodeState s;
  s.rng.seed(cfg.seed);
  auto& f = s.frame;
  f.time = 0.0;
  f.robot.position = cfg.robot_start;
  f.robot.velocity = Vec2d::Zero();
  f.robot.radius = cfg.robot_radius;
  f.robot.goal = cfg.robot_goal;
  f.robot.task_label = cfg.task_label;
  f.robot.elapsed_time = 0.0;

  std::vector<Disc> occupied = {{cfg.robot_start, cfg.robot_radius},
                                {cfg.robot_goal, cfg.robot_radius}};
  std::vector<Disc> goals = {{cfg.robot_goal, cfg.robot_radius}};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rho = cfg.human_radius;

  for (int k = 1; k <= cfg.n_humans; ++k) {
    HumanVertex h;
    h.id = k;
    h.radius = rho;
    h.activity = draw_activity(cfg, s.rng);
    const bool still = is_stationary(h.activity);
    bool placed = false;
    for (int attempt = 0; attempt < kSpawnAttempts && !placed; ++attempt) {
      Vec2d start;
      Vec2d target;
      if (cfg.spawn_rule == SpawnRule::kCircleCrossing) {
        if (still) {
          start = uniform_in_disc(cfg.circle_radius, s.rng);
          target = start;
        } else {
          const double theta = 2.0 * std::numbers::pi * unit(s.rng);
          const double jx = (unit(s.rng) - 0.5) * 0.5;
          const double jy = (unit(s.rng) - 0.5) * 0.5;
          const Vec2d jitter(jx, jy);
          start = cfg.circle_radius * unit_heading(theta) + jitter;
          target = -start;
        }
      } else {
        start = uniform_in_arena(cfg, rho, s.rng);
        target = still ? start : uniform_in_arena(cfg, rho, s.rng);
      }
      if (!clear_of(start, rho, occupied)) continue;
      if (!still && !clear_of(target, rho, goals)) continue;
      h.position = start;
      s.plans.push_back({start, target});
      occupied.push_back({start, rho});
      goals.push_back({target, rho});
      placed = true;
    }
    if (!placed) {
      throw ConfigError("could not place human_" + std::to_string(k) + " after " +
                        std::to_string(kSpawnAttempts) + " attempts");
    }
    f.humans.push_back(std::move(h));
  }
  // Initial velocities so that the first observation already shows motion.
  const Points2d vel = human_velocities(cfg, s);
  for (std::size_t i = 0; i < f.humans.size(); ++i) {
    f.humans[i].velocity = vel.col(static_cast<Eigen::Index>(i));
  }
  return s;
}

EpisodeState step(const ScenarioConfig& cfg, const EpisodeState& state, const Vec2d& command) {
  if (state.status != EpisodeStatus::kRunning) {
    throw StateError(std::string("cannot step a terminal episode (") + status_name(state.status) +
                     ")");
  }
  if (!command.allFinite()) {
    throw InputError("robot command is not finite");
  }
  EpisodeState next = state;
  const double dt = cfg.dt();
  Vec2d cmd = command;
  const double max_speed = cfg.planner.compliance.max_speed;
  if (cmd.norm() > max_speed) cmd *= max_speed / cmd.norm();

  const Points2d vel = human_velocities(cfg, next);
  const Vec2d robot0 = next.frame.robot.position;
  const Points2d humans0 = next.frame.human_positions();
  Eigen::ArrayXd contact(humans0.cols());
  for (Eigen::Index i = 0; i < humans0.cols(); ++i) {
    contact(i) = next.frame.robot.radius + next.frame.humans[static_cast<std::size_t>(i)].radius;
  }

  bool collided = false;
  for (int sub = 1; sub <= kCollisionSubsteps; ++sub) {
    const double tau = dt * sub / kCollisionSubsteps;
    const Vec2d r = robot0 + cmd * tau;
    const Points2d hs = humans0 + vel * tau;
    if (hs.cols() > 0 && (distances_from(r, hs).transpose() < contact).any()) {
      collided = true;
    }
  }

  next.tick += 1;
  next.frame.time = next.tick * dt;
  next.frame.robot.elapsed_time = next.frame.time;
  next.frame.robot.position = robot0 + cmd * dt;
  next.frame.robot.velocity = cmd;
  for (std::size_t i = 0; i < next.frame.humans.size(); ++i) {
    auto& h = next.frame.humans[i];
    h.velocity = vel.col(static_cast<Eigen::Index>(i));
    h.position = humans0.col(static_cast<Eigen::Index>(i)) + h.velocity * dt;
  }

  if (cfg.activity_switch_interval > 0 && next.tick % cfg.activity_switch_interval == 0) {
    for (auto& h : next.frame.humans) {
      h.activity = draw_activity(cfg, next.rng);
    }
  }

  if (collided) {
    next.status = EpisodeStatus::kCollision;
  } else if (distance(next.frame.robot.position, next.frame.robot.goal) <= cfg.goal_radius) {
    next.status = EpisodeStatus::kSuccess;
  } else if (next.frame.robot.elapsed_time > cfg.t_max()) {
    next.status = EpisodeStatus::kTimeout;
  }
  return next;
}

EpisodeResult run_episode(const ScenarioConfig& cfg, const Policy& policy) {
  EpisodeResult result;
  result.seed = cfg.seed;
  result.dt = cfg.dt();
  EpisodeState state = spawn_scenario(cfg);
  result.trajectory.push_back(state.frame);
  while (state.status == EpisodeStatus::kRunning) {
    const ObservationFrame* prev =
        result.trajectory.size() >= 2 ? &result.trajectory[result.trajectory.size() - 2] : nullptr;
    PolicyDecision decision;
    try {
      decision = policy(state.frame, prev);
    } catch (const std::exception& e) {
      result.status = EpisodeStatus::kAborted;
      result.abort_reason = e.what();
      result.abort_error = std::current_exception();
      return result;
    }
    state = step(cfg, state, decision.action.velocity);
    result.steps.push_back({decision.action, std::move(decision.outcome), decision.repaired});
    result.trajectory.push_back(state.frame);
  }
  result.status = state.status;
  return result;
}

Policy planner_policy(const PlannerConfig& config) {
  return [config](const ObservationFrame& curr, const ObservationFrame*) {
    auto outcome = plan_step(curr, config);
    PolicyDecision d;
    d.action = outcome.action;
    d.outcome = std::move(outcome);
    return d;
  };
}

Policy stationary_policy() {
  return [](const ObservationFrame&, const ObservationFrame*) { return PolicyDecision{}; };
}

}  // namespace socnav
