// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/observation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "socnav/errors.hpp"

namespace socnav {

Activity::Activity(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw InputError("activity name must not be empty");
  }
}

const std::vector<Activity>& Activity::builtins() {
  static const std::vector<Activity> kBuiltins = {
      walking(), talking(), standing(), sitting(), phone()};
  return kBuiltins;
}

bool Activity::is_builtin() const {
  const auto& b = builtins();
  return std::find(b.begin(), b.end(), *this) != b.end();
}

std::string AgentId::name() const {
  return is_robot() ? std::string("robot") : "human_" + std::to_string(index_);
}

AgentId AgentId::parse(std::string_view text) {
  if (text == "robot") {
    return robot();
  }
  constexpr std::string_view kPrefix = "human_";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    int k = 0;
    const auto digits = text.substr(kPrefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1) {
      return human(k);
    }
  }
  throw InputError("unknown agent identifier '" + std::string(text) + "'");
}

Points2d ObservationFrame::human_positions() const {
  Points2d out(2, static_cast<Eigen::Index>(humans.size()));
  for (std::size_t i = 0; i < humans.size(); ++i) {
    out.col(static_cast<Eigen::Index>(i)) = humans[i].position;
  }
  return out;
}

const HumanVertex* ObservationFrame::find_human(int id) const {
  auto it = std::find_if(humans.begin(), humans.end(),
                         [id](const HumanVertex& h) { return h.id == id; });
  return it == humans.end() ? nullptr : &*it;
}

void validate_frame(const ObservationFrame& frame) {
  if (!std::isfinite(frame.time) || frame.time < 0.0) {
    throw InputError("frame time must be finite and non-negative");
  }
  const auto& r = frame.robot;
  if (!all_finite(r.position) || !all_finite(r.velocity) || !all_finite(r.goal)) {
    throw InputError("robot state contains non-finite values");
  }
  if (!(r.radius > 0.0) || !std::isfinite(r.radius)) {
    throw InputError("robot radius must be positive");
  }
  if (!std::isfinite(r.elapsed_time) || r.elapsed_time < 0.0) {
    throw InputError("robot elapsed time must be finite and non-negative");
  }
  std::set<int> seen;
  for (const auto& h : frame.humans) {
    if (!all_finite(h.position) || !all_finite(h.velocity)) {
      throw InputError("human_" + std::to_string(h.id) + " has non-finite state");
    }
    if (!(h.radius > 0.0) || !std::isfinite(h.radius)) {
      throw InputError("human radius must be positive");
    }
    if (h.id < 1 || !seen.insert(h.id).second) {
      throw IdentityError("duplicate or invalid human id " + std::to_string(h.id));
    }
  }
}

}  // namespace socnav
