// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "mutations.hpp"
#include "oracles.hpp"
#include "socnav/cli.hpp"
#include "socnav/metrics.hpp"
#include "socnav/reasoner.hpp"
#include "socnav/simulator.hpp"
#include "socnav/trace.hpp"
#include "socnav/world_model.hpp"
#include "templates.hpp"

namespace socnav {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c, d);
  return buf;
}

// 1. Truth table over all predicate vectors and levels.
Verdict ac1() {
  int membership = 0;
  int classified = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    const auto v = PredicateVector::from_bits(bits);
    for (auto level : kLevels) {
      bool lib = true;
      for (auto p : level_predicates(level)) lib = lib && v.holds(p);
      membership += lib == oracle::level_holds(static_cast<int>(level), v.es, v.ed, v.not_ec, v.et);
    }
    classified += static_cast<int>(classify(v)) == oracle::eq1_level(v.es, v.ed, v.not_ec, v.et);
  }
  return {membership == 64 && classified == 16,
          std::to_string(membership) + "/64 level memberships, " + std::to_string(classified) +
              "/16 classifications"};
}

// 2. Predicate evaluators against the per-step per-human scan.
Verdict ac2() {
  std::mt19937_64 rng(2024);
  ComplianceParams p;
  const auto actions = sample_actions(ActionSpace::standard());
  std::uniform_int_distribution<std::size_t> pick(0, actions.size() - 1);
  int agree[4] = {0, 0, 0, 0};
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto f = oracle::random_frame(rng, 8);
    const auto& a = actions[pick(rng)];
    const auto r = rollout(a, f, 5, p.dt);
    const auto o = oracle::scan(f, a.velocity.x(), a.velocity.y(), 5, p.dt, p);
    agree[0] += eval_activity_awareness(r, p) == o.es;
    agree[1] += eval_distance_awareness(r, p) == o.ed;
    agree[2] += eval_collision_free(r, p) == o.nec;
    agree[3] += eval_time_constraint(r, f.robot.elapsed_time, p) == o.et;
  }
  bool pass = true;
  std::string detail;
  const char* names[] = {"Es", "Ed", "~Ec", "Et"};
  for (int k = 0; k < 4; ++k) {
    pass = pass && agree[k] == n;
    detail += std::string(k ? ", " : "") + names[k] + " " + std::to_string(agree[k]) + "/" +
              std::to_string(n);
  }
  return {pass, detail};
}

// 3. Proof round trips and mutation resistance.
Verdict ac3() {
  int cases = 0, agreed = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    const auto facts = PredicateVector::from_bits(bits);
    for (auto level : kLevels) {
      ++cases;
      const CandidateAction a{Vec2d(0.5, 0), static_cast<int>(bits)};
      auto result = prove_level(a, level, facts);
      const bool expect =
          oracle::level_holds(static_cast<int>(level), facts.es, facts.ed, facts.not_ec, facts.et);
      if (auto* tree = std::get_if<ProofTree>(&result)) {
        agreed += expect && check_proof(*tree, facts);
      } else {
        agreed += !expect && !check_proof(assemble_proof(a, level), facts);
      }
    }
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<unsigned> bits_dist(0, 15);
  std::uniform_int_distribution<int> index_dist(0, 48);
  int mutants = 0, rejected = 0;
  while (mutants < 1000) {
    const auto facts = PredicateVector::from_bits(bits_dist(rng));
    const auto level = kLevels[static_cast<std::size_t>(mutants % 4)];
    auto result = prove_level({Vec2d(0, 1), index_dist(rng)}, level, facts);
    if (!std::holds_alternative<ProofTree>(result)) continue;
    auto tree = std::get<ProofTree>(result);
    mutation::mutate(tree, rng);
    ++mutants;
    rejected += !check_proof(tree, facts);
  }
  return {agreed == 64 && cases == 64 && rejected == 1000,
          std::to_string(agreed) + "/64 round trips, " + std::to_string(rejected) +
              "/1000 mutants rejected"};
}

// 4. Degradation against brute-force maximization.
Verdict ac4() {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<unsigned> bits(0, 15);
  std::uniform_int_distribution<int> size(1, 49);
  std::uniform_real_distribution<double> score(-10, 0);
  std::bernoulli_distribution coarse(0.3);
  int ok = 0, forced = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<ScoredCandidate> cs;
    const int n = size(rng);
    const bool ties = coarse(rng);
    for (int i = 0; i < n; ++i) {
      const double s = ties ? std::round(score(rng)) : score(rng);
      cs.push_back({CandidateAction{Vec2d(0, 0), i}, PredicateVector::from_bits(bits(rng)), s});
    }
    const auto out = degrade_and_select(cs);
    const auto expect = oracle::brute_force_select(cs);
    bool good;
    if (expect.level == 5) {
      ++forced;
      good = out.forced && !out.verified && out.level == ComplianceLevel::kLevel4;
    } else {
      good = !out.forced && out.verified && static_cast<int>(out.level) == expect.level &&
             out.action.index == expect.index;
    }
    ok += good;
  }
  return {ok == 1000, std::to_string(ok) + "/1000 sets agree (" + std::to_string(forced) +
                          " forced)"};
}

// 5. Oracle-backed reasoning pipeline against plan_step.
Verdict ac5() {
  const int sizes[] = {0, 5, 10};
  int same = 0;
  for (int i = 0; i < 100; ++i) {
    ScenarioConfig cfg;
    cfg.n_humans = sizes[i % 3];
    cfg.seed = static_cast<std::uint64_t>(1000 + i);
    // Advance a few planner ticks so that most frames carry a predecessor.
    auto episode = run_episode(cfg, planner_policy(cfg.planner));
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(i % 12), episode.trajectory.size() - 2);
    const auto& curr = episode.trajectory[k];
    const ObservationFrame* prev = k > 0 ? &episode.trajectory[k - 1] : nullptr;
    OracleBackend backend(curr, cfg.planner);
    const auto step =
        reason_step(backend, curr, prev, cfg, build_guidance_chain(cfg.planner.compliance));
    const auto planned = plan_step(curr, cfg.planner);
    same += step.validated.outcome.action == planned.action &&
            step.validated.outcome.level == planned.level;
  }
  return {same == 100, std::to_string(same) + "/100 frames identical"};
}

// 6. Rendered sentences against hand-filled templates.
std::string expected_prompt(const ObservationFrame& prev, const ObservationFrame& curr,
                            double social) {
  using golden::fill;
  using golden::num;
  using golden::point;
  auto pt = [](const Vec2d& v) { return point(v.x(), v.y()); };
  auto dist = [](const Vec2d& a, const Vec2d& b) { return std::hypot(a.x() - b.x(), a.y() - b.y()); };
  std::vector<const HumanVertex*> hs;
  for (const auto& h : curr.humans) hs.push_back(&h);
  std::sort(hs.begin(), hs.end(), [](auto* a, auto* b) { return a->id < b->id; });
  const auto& r = curr.robot;
  std::string out = fill(golden::kRobotVertex, {{"r", "robot"},
                                                {"p", pt(r.position)},
                                                {"v", pt(r.velocity)},
                                                {"g", pt(r.goal)},
                                                {"T", r.task_label},
                                                {"d", num(social)}}) + "\n";
  for (const auto* h : hs) {
    out += fill(golden::kHumanVertex, {{"h", "human_" + std::to_string(h->id)},
                                       {"p", pt(h->position)},
                                       {"v", pt(h->velocity)},
                                       {"r", num(h->radius)},
                                       {"a", h->activity.name()}}) + "\n";
  }
  const double s = dist(r.position, r.goal);
  const double ds = s - dist(prev.robot.position, prev.robot.goal);
  out += fill(golden::kRobotTemporal, {{"s", num(s)},
                                       {"r", "robot"},
                                       {"g", pt(r.goal)},
                                       {"y", golden::word(ds)},
                                       {"ds", num(ds)}}) + "\n";
  for (const auto* h : hs) {
    const auto* before = prev.find_human(h->id);
    const double v = std::hypot(h->velocity.x(), h->velocity.y());
    const double dv = v - std::hypot(before->velocity.x(), before->velocity.y());
    out += fill(golden::kHumanTemporal, {{"v", num(v)},
                                         {"h", "human_" + std::to_string(h->id)},
                                         {"yh", golden::word(dv)},
                                         {"dv", num(dv)}}) + "\n";
  }
  auto spatial = [&](const std::string& a, const Vec2d& pa, const Vec2d& qa, const std::string& b,
                     const Vec2d& pb, const Vec2d& qb) {
    const double rd = dist(pa, pb);
    const double drd = rd - dist(qa, qb);
    return fill(golden::kSpatial, {{"rd", num(rd)},
                                   {"h", a},
                                   {"r", b},
                                   {"yhr", golden::word(drd)},
                                   {"drd", num(drd)}}) + "\n";
  };
  for (const auto* h : hs) {
    out += spatial("human_" + std::to_string(h->id), h->position, prev.find_human(h->id)->position,
                   "robot", r.position, prev.robot.position);
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      out += spatial("human_" + std::to_string(hs[i]->id), hs[i]->position,
                     prev.find_human(hs[i]->id)->position, "human_" + std::to_string(hs[j]->id),
                     hs[j]->position, prev.find_human(hs[j]->id)->position);
    }
  }
  return out;
}

Verdict ac6() {
  std::mt19937_64 rng(66);
  int matched = 0, sentences = 0;
  const int graphs = 12;
  for (int g = 0; g < graphs; ++g) {
    auto prev = oracle::random_frame(rng, 1 + g % 6);
    prev.time = 1.0;
    auto curr = prev;
    curr.time = 1.25;
    curr.robot.position += curr.robot.velocity * 0.25;
    curr.robot.velocity *= 0.5;
    for (auto& h : curr.humans) {
      h.position += h.velocity * 0.25;
      if (h.id % 2 == 0) h.velocity *= 1.5;
    }
    const double social = 0.6 + 0.1 * g;
    const auto rendered = render_observation_prompt(build_world_graph(prev, curr, social));
    const auto expected = expected_prompt(prev, curr, social);
    matched += rendered == expected;
    sentences += static_cast<int>(std::count(expected.begin(), expected.end(), '\n'));
  }
  return {matched == graphs, std::to_string(matched) + "/" + std::to_string(graphs) +
                                 " graphs byte-identical (" + std::to_string(sentences) +
                                 " sentences)"};
}

// 7. Safety over 500 planner episodes.
Verdict ac7() {
  int successes = 0, close_calls = 0, actions = 0, bad_proofs = 0, forced = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ScenarioConfig cfg;
    cfg.n_humans = 5;
    cfg.seed = seed;
    const auto r = run_episode(cfg, planner_policy(cfg.planner));
    if (r.status == EpisodeStatus::kSuccess) {
      ++successes;
      for (const auto& f : r.trajectory) {
        for (const auto& h : f.humans) {
          close_calls += (f.robot.position - h.position).norm() < f.robot.radius + h.radius;
        }
      }
    }
    for (const auto& s : r.steps) {
      ++actions;
      if (!s.outcome) {
        ++bad_proofs;
        continue;
      }
      forced += s.outcome->forced;
      if (!s.outcome->forced && !check_proof(s.outcome->tree, s.outcome->facts)) ++bad_proofs;
    }
  }
  return {close_calls == 0 && bad_proofs == 0,
          std::to_string(successes) + "/500 successes, " + std::to_string(close_calls) +
              " contact ticks in successes, " + std::to_string(actions - bad_proofs) + "/" +
              std::to_string(actions) + " actions verified or forced (" + std::to_string(forced) +
              " forced)"};
}

// 8. Empty-crowd efficiency.
Verdict ac8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-5.5, 5.5);
  int ok = 0;
  double worst_nt = 0.0, worst_np = 0.0;
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    ScenarioConfig cfg;
    cfg.n_humans = 0;
    cfg.seed = static_cast<std::uint64_t>(i);
    do {
      cfg.robot_start = Vec2d(u(rng), u(rng));
      cfg.robot_goal = Vec2d(u(rng), u(rng));
    } while ((cfg.robot_goal - cfg.robot_start).norm() < 4.0);
    const auto r = run_episode(cfg, planner_policy(cfg.planner));
    const auto rec = episode_metrics(r, cfg.planner.compliance);
    const double line = (cfg.robot_goal - cfg.robot_start).norm();
    const double nt_ratio = rec.nt / (line / cfg.planner.compliance.max_speed);
    const double np_ratio = rec.np / line;
    worst_nt = std::max(worst_nt, std::abs(nt_ratio - 1.0));
    worst_np = std::max(worst_np, std::abs(np_ratio - 1.0));
    ok += rec.success && std::abs(nt_ratio - 1.0) <= 0.1 && std::abs(np_ratio - 1.0) <= 0.1;
  }
  return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " episodes; worst NT deviation " +
                       fmt("%.1f%%", 100 * worst_nt) + ", worst NP deviation " +
                       fmt("%.1f%%", 100 * worst_np)};
}

// 9. Metric identities and recomputation from trace files.
Verdict ac9() {
  int checked = 0, nt_ok = 0, np_ok = 0, trace_ok = 0, successes = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ScenarioConfig cfg;
    cfg.n_humans = seed % 2 ? 10 : 5;
    cfg.seed = seed;
    const auto r = run_episode(cfg, planner_policy(cfg.planner));
    const auto rec = episode_metrics(r, cfg.planner.compliance);
    ++checked;
    nt_ok += rec.nt == r.terminal_tick() * cfg.dt();
    if (rec.success) {
      ++successes;
      const double reach = (r.trajectory.back().robot.position - cfg.robot_start).norm();
      np_ok += rec.np >= reach && rec.np >= rec.straight_line - cfg.goal_radius;
    }
    std::istringstream in(trace_text(r));
    const auto back = episode_metrics(result_from_trace(read_trace(in)), cfg.planner.compliance);
    trace_ok += back == rec;
  }
  return {nt_ok == checked && np_ok == successes && trace_ok == checked,
          "NT exact " + std::to_string(nt_ok) + "/" + std::to_string(checked) + ", NP bound " +
              std::to_string(np_ok) + "/" + std::to_string(successes) +
              ", trace recomputation bit-exact " + std::to_string(trace_ok) + "/" +
              std::to_string(checked)};
}

// 10. Densification never helps beyond sampling noise.
Verdict ac10() {
  RunSpec spec;
  spec.backend = parse_backend("oracle");
  spec.episodes = 500;
  spec.seed = 0;
  spec.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  ScenarioConfig five;
  five.n_humans = 5;
  ScenarioConfig ten;
  ten.n_humans = 10;
  const auto a = run_suite(five, spec);
  const auto b = run_suite(ten, spec);
  int aborted = 0;
  for (const auto* s : {&a, &b}) {
    for (const auto& e : s->episodes) aborted += e.status == EpisodeStatus::kAborted;
  }
  const double p5 = a.report.sr, p10 = b.report.sr;
  const double se = std::sqrt(p5 * (1 - p5) / 500 + p10 * (1 - p10) / 500);
  return {aborted == 0 && p10 <= p5 + 2 * se,
          fmt("SR5 %.3f, SR10 %.3f, 2*SE %.3f", p5, p10, 2 * se) + ", " + std::to_string(aborted) +
              " aborted"};
}

}  // namespace
}  // namespace socnav

int main() {
  using namespace socnav;
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "constraint truth table", ac1},
      {"AC2", "predicate scan equivalence", ac2},
      {"AC3", "proof soundness and mutation resistance", ac3},
      {"AC4", "degradation correctness", ac4},
      {"AC5", "oracle pipeline equivalence", ac5},
      {"AC6", "template fidelity", ac6},
      {"AC7", "safety property", ac7},
      {"AC8", "empty-crowd efficiency", ac8},
      {"AC9", "metrics identities", ac9},
      {"AC10", "densification direction", ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-4s %s  %s: %s (%.2f s)\n", c.id, v.pass ? "PASS" : "FAIL", c.name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
