// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_BACKEND_HPP_
#define SOCNAV_BACKEND_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "socnav/errors.hpp"

namespace socnav {

struct BackendInfo {
  std::string name;
  std::size_t max_prompt_chars = 0;  // 0 = unlimited
};

/// Text-completion service answering one guidance step at a time.
/// Implementations keep no conversation state and must tolerate concurrent
/// calls.
class ReasoningBackend {
 public:
  virtual ~ReasoningBackend() = default;
  virtual BackendInfo info() const = 0;
  /// Raw reply text. Throws TransportError when the service cannot answer.
  virtual std::string complete(const std::string& prompt) = 0;
};

class TransportError : public Error {
 public:
  enum class Code { kConnection, kTimeout, kHttpStatus, kAuth, kMalformedResponse };

  TransportError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Hex SHA-256 of `text`; the key under which replies are recorded.
std::string prompt_hash(const std::string& text);

struct RemoteBackendOptions {
  std::string endpoint;  // e.g. http://localhost:8000/v1/chat/completions
  std::string model;
  std::string token_env = "SOCNAV_API_KEY";  // bearer token source; unset = no auth header
  double timeout_seconds = 30.0;
  std::size_t max_prompt_chars = 0;
};

/// Chat-completion adapter. Request body:
///   {"model": <model>, "messages": [{"role": "user", "content": <prompt>}]}
/// The reply text is read from choices[0].message.content.
class RemoteBackend : public ReasoningBackend {
 public:
  explicit RemoteBackend(RemoteBackendOptions options);
  BackendInfo info() const override;
  std::string complete(const std::string& prompt) override;

 private:
  RemoteBackendOptions options_;
  std::string base_;  // scheme://host:port
  std::string path_;
};

/// Answers from a recorded fixture (JSON Lines of {"prompt_sha256", "reply"}).
/// FixtureError when the file is missing or a prompt was never recorded.
class ReplayBackend : public ReasoningBackend {
 public:
  explicit ReplayBackend(const std::string& fixture_path);
  BackendInfo info() const override;
  std::string complete(const std::string& prompt) override;
  std::size_t size() const { return replies_.size(); }

 private:
  std::map<std::string, std::string> replies_;
};

/// Thread-safe (prompt hash, reply) collection shared by recording backends.
class FixtureRecorder {
 public:
  void add(const std::string& prompt, const std::string& reply);
  std::size_t size() const;
  /// Writes the fixture atomically (temp file then rename).
  void save(const std::string& fixture_path) const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::string> replies_;
};

/// Forwards to `inner` and remembers every (prompt hash, reply) pair.
class RecordingBackend : public ReasoningBackend {
 public:
  explicit RecordingBackend(std::shared_ptr<ReasoningBackend> inner,
                            std::shared_ptr<FixtureRecorder> recorder = nullptr);
  BackendInfo info() const override;
  std::string complete(const std::string& prompt) override;
  void save(const std::string& fixture_path) const { recorder_->save(fixture_path); }
  const std::shared_ptr<FixtureRecorder>& recorder() const { return recorder_; }

 private:
  std::shared_ptr<ReasoningBackend> inner_;
  std::shared_ptr<FixtureRecorder> recorder_;
};

}  // namespace socnav

#endif  // SOCNAV_BACKEND_HPP_
