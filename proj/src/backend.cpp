// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "socnav/backend.hpp"
#include "socnav/fileio.hpp"

namespace socnav {

using nlohmann::json;

std::string prompt_hash(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

RemoteBackend::RemoteBackend(RemoteBackendOptions options) : options_(std::move(options)) {
  const auto scheme_end = options_.endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw TransportError(TransportError::Code::kConnection,
                         "endpoint must look like http(s)://host[:port]/path");
  }
  const auto path_start = options_.endpoint.find('/', scheme_end + 3);
  base_ = options_.endpoint.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : options_.endpoint.substr(path_start);
}

BackendInfo RemoteBackend::info() const {
  return {"remote:" + options_.model, options_.max_prompt_chars};
}

std::string RemoteBackend::complete(const std::string& prompt) {
  using Code = TransportError::Code;
  httplib::Client client(base_);
  const auto secs = static_cast<time_t>(options_.timeout_seconds);
  const auto usecs = static_cast<time_t>((options_.timeout_seconds - secs) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  httplib::Headers headers;
  if (!options_.token_env.empty()) {
    if (const char* token = std::getenv(options_.token_env.c_str()); token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }
  const json body = {{"model", options_.model},
                     {"messages", json::array({{{"role", "user"}, {"content", prompt}}})}};

  const auto started = std::chrono::steady_clock::now();
  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    const double waited =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const auto err = res.error();
    const bool timed_out = err == httplib::Error::ConnectionTimeout ||
                           (err == httplib::Error::Read && waited >= 0.9 * options_.timeout_seconds);
    if (timed_out) {
      throw TransportError(Code::kTimeout, "request to " + options_.endpoint + " timed out");
    }
    throw TransportError(Code::kConnection,
                         "request to " + options_.endpoint + " failed: " + httplib::to_string(err));
  }
  if (res->status == 401 || res->status == 403) {
    throw TransportError(Code::kAuth, "authentication rejected (HTTP " +
                                          std::to_string(res->status) + ")");
  }
  if (res->status < 200 || res->status >= 300) {
    throw TransportError(Code::kHttpStatus, "HTTP " + std::to_string(res->status));
  }
  try {
    const auto j = json::parse(res->body);
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw TransportError(Code::kMalformedResponse,
                         std::string("unexpected completion body: ") + e.what());
  }
}

ReplayBackend::ReplayBackend(const std::string& fixture_path) {
  std::ifstream in(fixture_path);
  if (!in) {
    throw FixtureError("replay fixture '" + fixture_path + "' not found");
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = json::parse(line);
      replies_[j.at("prompt_sha256").get<std::string>()] = j.at("reply").get<std::string>();
    } catch (const json::exception& e) {
      throw FixtureError("replay fixture line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

BackendInfo ReplayBackend::info() const { return {"replay", 0}; }

std::string ReplayBackend::complete(const std::string& prompt) {
  const auto key = prompt_hash(prompt);
  auto it = replies_.find(key);
  if (it == replies_.end()) {
    throw FixtureError("no recorded reply for prompt " + key);
  }
  return it->second;
}

void FixtureRecorder::add(const std::string& prompt, const std::string& reply) {
  auto key = prompt_hash(prompt);
  std::lock_guard lock(mu_);
  replies_[std::move(key)] = reply;
}

std::size_t FixtureRecorder::size() const {
  std::lock_guard lock(mu_);
  return replies_.size();
}

void FixtureRecorder::save(const std::string& fixture_path) const {
  std::ostringstream os;
  {
    std::lock_guard lock(mu_);
    for (const auto& [hash, reply] : replies_) {
      os << json{{"prompt_sha256", hash}, {"reply", reply}}.dump() << "\n";
    }
  }
  write_file_atomic(fixture_path, os.str());
}

RecordingBackend::RecordingBackend(std::shared_ptr<ReasoningBackend> inner,
                                   std::shared_ptr<FixtureRecorder> recorder)
    : inner_(std::move(inner)),
      recorder_(recorder ? std::move(recorder) : std::make_shared<FixtureRecorder>()) {}

BackendInfo RecordingBackend::info() const { return inner_->info(); }

std::string RecordingBackend::complete(const std::string& prompt) {
  auto reply = inner_->complete(prompt);
  recorder_->add(prompt, reply);
  return reply;
}

}  // namespace socnav
