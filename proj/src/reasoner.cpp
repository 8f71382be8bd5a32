// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/reasoner.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "socnav/fileio.hpp"
#include "socnav/world_model.hpp"

namespace socnav {

const char* schema_tag(StepSchema schema) {
  switch (schema) {
    case StepSchema::kWorld: return "world";
    case StepSchema::kEs: return "es";
    case StepSchema::kEd: return "ed";
    case StepSchema::kNotEc: return "not_ec";
    case StepSchema::kEt: return "et";
    case StepSchema::kLevel: return "level";
    case StepSchema::kVerify: return "verify";
    case StepSchema::kAction: return "action";
  }
  return "world";
}

namespace {

constexpr std::array<StepSchema, 8> kAllSchemas = {
    StepSchema::kWorld, StepSchema::kEs,    StepSchema::kEd,     StepSchema::kNotEc,
    StepSchema::kEt,    StepSchema::kLevel, StepSchema::kVerify, StepSchema::kAction};

std::optional<StepSchema> schema_from_tag(const std::string& tag) {
  for (auto s : kAllSchemas) {
    if (tag == schema_tag(s)) return s;
  }
  return std::nullopt;
}

std::optional<Predicate> predicate_of(StepSchema s) {
  switch (s) {
    case StepSchema::kEs: return Predicate::kEs;
    case StepSchema::kEd: return Predicate::kEd;
    case StepSchema::kNotEc: return Predicate::kNotEc;
    case StepSchema::kEt: return Predicate::kEt;
    default: return std::nullopt;
  }
}

const char* reply_format(StepSchema s) {
  switch (s) {
    case StepSchema::kWorld: return "humans=<count>\ngoal_distance=<meters>";
    case StepSchema::kEs:
    case StepSchema::kEd:
    case StepSchema::kNotEc:
    case StepSchema::kEt: return "a_<index>=<true|false>  (one line per candidate)";
    case StepSchema::kLevel: return "candidate=a_<index>\nlevel=<D1|D2|D3|D4>";
    case StepSchema::kVerify:
      return "candidate=a_<index>\nlevel=<D1|D2|D3|D4>\nverified=<true|false>";
    case StepSchema::kAction: return "vx=<m/s>\nvy=<m/s>\nlevel=<D1|D2|D3|D4>";
  }
  return "";
}

std::string pref_list(const ComplianceParams& p) {
  std::string out;
  for (const auto& [name, d] : p.pref_table) {
    if (!out.empty()) out += ", ";
    out += name + " " + format_number(d);
  }
  return out;
}

std::string predicted(const ComplianceParams& p, int horizon) {
  return "over the " + std::to_string(horizon) + " predicted steps of " + format_number(p.dt) +
         " s, for every human H and at every step";
}

}  // namespace

bool GuidanceChain::operator==(const GuidanceChain& other) const {
  if (steps.size() != other.steps.size()) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& a = steps[i];
    const auto& b = other.steps[i];
    if (a.objective != b.objective || a.schema != b.schema || a.reference != b.reference) {
      return false;
    }
  }
  return true;
}

GuidanceChain build_guidance_chain(const ComplianceParams& p, int horizon) {
  GuidanceChain c;
  c.steps.push_back(
      {"Restate the world state: count the humans in view and give the robot's current "
       "distance to its destination.",
       StepSchema::kWorld, "world"});
  c.steps.push_back({"Activity-Awareness. For every candidate a_i decide Es(a_i): " +
                         predicted(p, horizon) +
                         ", DIST(R,H) >= Pref(H|a_H) + rho_R + rho_H with Pref = {" +
                         pref_list(p) + "} m.",
                     StepSchema::kEs, "Es"});
  c.steps.push_back({"Distance-Awareness. For every candidate a_i decide Ed(a_i): " +
                         predicted(p, horizon) + ", DIST(R,H) >= d_min + rho_R + rho_H with d_min = " +
                         format_number(p.d_min) + " m.",
                     StepSchema::kEd, "Ed"});
  c.steps.push_back({"Collision-Avoidance. For every candidate a_i decide ~Ec(a_i): " +
                         predicted(p, horizon) + ", DIST(R,H) >= rho_R + rho_H.",
                     StepSchema::kNotEc, "not_Ec"});
  c.steps.push_back({"Time-Constraint. For every candidate a_i decide Et(a_i): elapsed time + " +
                         format_number(horizon * p.dt) +
                         " s + (remaining distance after the prediction) / " +
                         format_number(p.max_speed) + " m/s <= T_max = " +
                         format_number(p.t_max) + " s.",
                     StepSchema::kEt, "Et"});
  c.steps.push_back(
      {"Classify. Levels: D1 = Es & Ed & ~Ec & Et; D2 = Es & ~Ec & Et; D3 = Ed & ~Ec & Et; "
       "D4 = ~Ec & Et. Find the most stringent level reached by any candidate and, among the "
       "candidates of that level, the one whose predicted end point is closest to the "
       "destination (ties: lowest index).",
       StepSchema::kLevel, "D1-D4"});
  c.steps.push_back(
      {"Verify. Re-check every conjunct of the claimed level for the chosen candidate. If one "
       "fails, re-apply the classification with the next weaker level (D2, then D3, then D4).",
       StepSchema::kVerify, "verification"});
  c.steps.push_back({"Emit the velocity command of the verified candidate together with its level.",
                     StepSchema::kAction, "action"});
  return c;
}

GuidanceChain build_single_step_chain(const ComplianceParams& p, int horizon) {
  const auto full = build_guidance_chain(p, horizon);
  std::string objective = "Think step by step about the following, then answer only with the action:";
  for (const auto& s : full.steps) {
    objective += "\n- " + s.objective;
  }
  GuidanceChain c;
  c.steps.push_back({objective, StepSchema::kAction, "action"});
  return c;
}

GuidanceChain load_guidance_chain(const std::string& path) {
  GuidanceChain c;
  try {
    const auto j = nlohmann::json::parse(read_file(path));
    for (const auto& s : j) {
      const auto tag = s.at("schema").get<std::string>();
      const auto schema = schema_from_tag(tag);
      if (!schema) throw ConfigError("unknown step schema '" + tag + "'");
      c.steps.push_back({s.at("objective").get<std::string>(), *schema, tag});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("guidance chain '" + path + "': " + e.what());
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  if (c.steps.empty() || c.steps.back().schema != StepSchema::kAction) {
    throw ConfigError("guidance chain must end with an action step");
  }
  return c;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<std::string> fenced_block(const std::string& reply, const std::string& tag) {
  const std::string open = "```" + tag + "\n";
  const auto start = reply.rfind(open);
  if (start == std::string::npos) return std::nullopt;
  const auto body = start + open.size();
  const auto end = reply.find("```", body);
  if (end == std::string::npos) return std::nullopt;
  return reply.substr(body, end - body);
}

std::optional<std::map<std::string, std::string>> key_values(const std::string& block) {
  std::map<std::string, std::string> out;
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) return std::nullopt;
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

std::optional<double> number(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<int> integer(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<bool> boolean(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  return std::nullopt;
}

std::optional<int> candidate_ref(const std::string& s) {
  if (s.rfind("a_", 0) != 0) return std::nullopt;
  auto v = integer(s.substr(2));
  if (!v || *v < 0) return std::nullopt;
  return v;
}

std::optional<ComplianceLevel> level_ref(const std::string& s) {
  for (auto l : kLevels) {
    if (s == level_name(l)) return l;
  }
  return std::nullopt;
}

template <typename T>
const std::string* field(const T& kv, const char* key) {
  auto it = kv.find(key);
  return it == kv.end() ? nullptr : &it->second;
}

std::optional<StepPayload> parse_payload(StepSchema schema,
                                         const std::map<std::string, std::string>& kv) {
  if (auto pred = predicate_of(schema)) {
    PredicateVerdicts v;
    v.predicate = *pred;
    for (const auto& [k, val] : kv) {
      auto idx = candidate_ref(k);
      auto b = boolean(val);
      if (!idx || !b) return std::nullopt;
      v.by_candidate[*idx] = *b;
    }
    if (v.by_candidate.empty()) return std::nullopt;
    return v;
  }
  switch (schema) {
    case StepSchema::kWorld: {
      const auto* n = field(kv, "humans");
      const auto* g = field(kv, "goal_distance");
      if (!n || !g) return std::nullopt;
      auto nv = integer(*n);
      auto gv = number(*g);
      if (!nv || !gv) return std::nullopt;
      return WorldRestatement{*nv, *gv};
    }
    case StepSchema::kLevel:
    case StepSchema::kVerify: {
      const auto* c = field(kv, "candidate");
      const auto* l = field(kv, "level");
      if (!c || !l) return std::nullopt;
      auto cv = candidate_ref(*c);
      auto lv = level_ref(*l);
      if (!cv || !lv) return std::nullopt;
      LevelClaim claim{*lv, *cv, std::nullopt};
      if (schema == StepSchema::kVerify) {
        const auto* v = field(kv, "verified");
        if (!v) return std::nullopt;
        claim.verified = boolean(*v);
        if (!claim.verified) return std::nullopt;
      }
      return claim;
    }
    case StepSchema::kAction: {
      const auto* x = field(kv, "vx");
      const auto* y = field(kv, "vy");
      const auto* l = field(kv, "level");
      if (!x || !y || !l) return std::nullopt;
      auto xv = number(*x);
      auto yv = number(*y);
      auto lv = level_ref(*l);
      if (!xv || !yv || !lv) return std::nullopt;
      return ActionClaim{Vec2d(*xv, *yv), *lv};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

StepResult parse_step_reply(StepSchema schema, const std::string& reply) {
  StepResult r;
  auto block = fenced_block(reply, schema_tag(schema));
  if (!block) return r;
  auto kv = key_values(*block);
  if (!kv) return r;
  r.payload = parse_payload(schema, *kv);
  r.parse_ok = r.payload.has_value();
  return r;
}

namespace {
constexpr const char* kSchemaMarker = "Reply with exactly one fenced block tagged `";
}

std::string render_step_instruction(const GuidanceStep& step, std::size_t index,
                                    std::size_t count) {
  const std::string tag = schema_tag(step.schema);
  return "## Step " + std::to_string(index + 1) + " of " + std::to_string(count) + ": " +
         step.objective + "\n" + kSchemaMarker + tag + "` in this format:\n```" + tag + "\n" +
         reply_format(step.schema) + "\n```\n";
}

ChainResult run_chain(ReasoningBackend& backend, const std::string& env_summary,
                      const std::string& obs_prompt, const GuidanceChain& chain) {
  if (chain.steps.empty()) {
    throw ChainError(ChainError::Kind::kParse, 0, "guidance chain is empty");
  }
  ChainResult out;
  std::string context = env_summary + "\n# Observation\n" + obs_prompt + "\n";
  const auto count = chain.steps.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& step = chain.steps[i];
    const std::string instruction = render_step_instruction(step, i, count);
    const std::string prompt = context + instruction;
    std::optional<StepResult> parsed;
    std::string reply;
    ChainError::Kind last_failure = ChainError::Kind::kParse;
    std::string last_message;
    for (int attempt = 0; attempt <= kStepRetries && !parsed; ++attempt) {
      try {
        reply = backend.complete(prompt);
      } catch (const TransportError& e) {
        last_failure = ChainError::Kind::kTransport;
        last_message = e.what();
        continue;
      }
      auto result = parse_step_reply(step.schema, reply);
      if (result.parse_ok) {
        parsed = std::move(result);
      } else {
        last_failure = ChainError::Kind::kParse;
        last_message = std::string("reply lacks a valid `") + schema_tag(step.schema) + "` block";
      }
    }
    if (!parsed) {
      throw ChainError(last_failure, i,
                       "step " + std::to_string(i + 1) + " failed after " +
                           std::to_string(kStepRetries + 1) + " attempts: " + last_message);
    }
    out.evidence.entries.push_back({i, prompt, reply, *parsed->payload});
    context += instruction + "### Evidence " + std::to_string(i + 1) + "\n" + reply + "\n";
  }
  const auto* claim = std::get_if<ActionClaim>(&out.evidence.entries.back().payload);
  if (claim == nullptr) {
    throw ChainError(ChainError::Kind::kParse, count - 1, "final step did not yield an action");
  }
  out.claim = *claim;
  return out;
}

OracleBackend::OracleBackend(ObservationFrame frame, PlannerConfig config)
    : frame_(std::move(frame)), config_(std::move(config)) {
  candidates_ = evaluate_candidates(frame_, config_);
  decision_ = degrade_and_select(candidates_);
}

BackendInfo OracleBackend::info() const { return {"oracle", 0}; }

std::string OracleBackend::complete(const std::string& prompt) {
  const auto marker = prompt.rfind(kSchemaMarker);
  std::optional<StepSchema> schema;
  if (marker != std::string::npos) {
    const auto start = marker + std::char_traits<char>::length(kSchemaMarker);
    const auto end = prompt.find('`', start);
    if (end != std::string::npos) schema = schema_from_tag(prompt.substr(start, end - start));
  }
  if (!schema) {
    return "I cannot tell which step is being asked for.";
  }
  const std::string tag = schema_tag(*schema);
  std::ostringstream os;
  os << "Evaluated with the world model.\n```" << tag << "\n";
  if (auto pred = predicate_of(*schema)) {
    for (const auto& c : candidates_) {
      os << action_term(c.action.index) << "=" << (c.facts.holds(*pred) ? "true" : "false")
         << "\n";
    }
  } else {
    switch (*schema) {
      case StepSchema::kWorld:
        os << "humans=" << frame_.humans.size() << "\n"
           << "goal_distance=" << format_number(distance(frame_.robot.position, frame_.robot.goal))
           << "\n";
        break;
      case StepSchema::kLevel:
        os << "candidate=" << action_term(decision_.action.index) << "\n"
           << "level=" << level_name(decision_.level) << "\n";
        break;
      case StepSchema::kVerify:
        os << "candidate=" << action_term(decision_.action.index) << "\n"
           << "level=" << level_name(decision_.level) << "\n"
           << "verified=" << (decision_.verified ? "true" : "false") << "\n";
        break;
      case StepSchema::kAction: {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "vx=%.17g\nvy=%.17g\n", decision_.action.velocity.x(),
                      decision_.action.velocity.y());
        os << buf << "level=" << level_name(decision_.level) << "\n";
        break;
      }
      default:
        break;
    }
  }
  os << "```\n";
  return os.str();
}

std::shared_ptr<ReasoningBackend> oracle_backend(const ObservationFrame& frame,
                                                 const PlannerConfig& config) {
  return std::make_shared<OracleBackend>(frame, config);
}

CandidateAction snap_to_candidate(const Vec2d& velocity, const ActionSpace& space) {
  const auto actions = sample_actions(space);
  CandidateAction best = actions.front();
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& a : actions) {
    const double d = (a.velocity - velocity).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = a;
    }
  }
  return best;
}

ValidatedOutcome validate_and_repair(const std::optional<ActionClaim>& claim,
                                     const ObservationFrame& frame, const PlannerConfig& config) {
  auto fallback = [&] { return ValidatedOutcome{plan_step(frame, config), true}; };
  if (!claim || claim->level == ComplianceLevel::kNone || !claim->velocity.allFinite()) {
    return fallback();
  }
  validate_frame(frame);
  const auto action = snap_to_candidate(claim->velocity, config.space);
  const auto r = rollout(action, frame, config.horizon_steps, config.compliance.dt);
  const auto facts = evaluate_predicates(r, frame.robot.elapsed_time, config.compliance);
  if (!std::holds_alternative<ProofTree>(prove_level(action, claim->level, facts))) {
    return fallback();
  }
  // The claim holds; report the strongest level the facts support.
  const auto level = classify(facts);
  DeductionOutcome out;
  out.action = action;
  out.level = level;
  out.facts = facts;
  out.tree = std::get<ProofTree>(prove_level(action, level, facts));
  out.verified = check_proof(out.tree, facts);
  out.forced = false;
  return {std::move(out), false};
}

ReasonedStep reason_step(ReasoningBackend& backend, const ObservationFrame& curr,
                         const ObservationFrame* prev, const ScenarioConfig& config,
                         const GuidanceChain& chain) {
  const double social = active_social_distance(curr, config.planner.compliance);
  const auto graph =
      prev != nullptr ? build_world_graph(*prev, curr, social) : build_world_graph(curr, social);
  const auto env = render_environment_summary(config);
  const auto obs = render_observation_prompt(graph);
  ReasonedStep out;
  std::optional<ActionClaim> claim;
  try {
    auto result = run_chain(backend, env, obs, chain);
    claim = result.claim;
    out.evidence = std::move(result.evidence);
  } catch (const ChainError& e) {
    out.chain_failure = e.what();
  }
  out.validated = validate_and_repair(claim, curr, config.planner);
  return out;
}

Policy reasoner_policy(BackendFactory factory, ScenarioConfig config, GuidanceChain chain) {
  return [factory = std::move(factory), config = std::move(config), chain = std::move(chain)](
             const ObservationFrame& curr, const ObservationFrame* prev) {
    auto backend = factory(curr);
    auto step = reason_step(*backend, curr, prev, config, chain);
    PolicyDecision d;
    d.action = step.validated.outcome.action;
    d.repaired = step.validated.repaired;
    d.outcome = std::move(step.validated.outcome);
    return d;
  };
}

}  // namespace socnav
