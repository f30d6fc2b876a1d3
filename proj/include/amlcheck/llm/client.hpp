#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "amlcheck/llm/prompt.hpp"

namespace amlcheck::llm {

class LlmError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ConfigError : public LlmError {
  using LlmError::LlmError;
};

class NetworkError : public LlmError {
  using LlmError::LlmError;
};

class TimeoutError : public LlmError {
  using LlmError::LlmError;
};

class HttpStatusError : public LlmError {
public:
  explicit HttpStatusError(int status, const std::string& body)
      : LlmError("chat completion endpoint returned HTTP " + std::to_string(status) +
                 (body.empty() ? "" : ": " + body.substr(0, 200))),
        status_(status) {}
  int status() const { return status_; }

private:
  int status_;
};

class MissingFixture : public LlmError {
public:
  explicit MissingFixture(const std::string& hash)
      : LlmError("no recorded response for prompt hash " + hash), hash_(hash) {}
  const std::string& hash() const { return hash_; }

private:
  std::string hash_;
};

struct LlmClientConfig {
  enum class Mode { Live, Replay };

  std::string endpoint_url = "https://api.openai.com/v1/chat/completions";
  std::string model_name = "gpt-4.1";
  std::string api_key_env_var = "OPENAI_API_KEY";
  double temperature = 0.0;
  int max_retries = 2;
  int timeout_seconds = 120;
  Mode mode = Mode::Replay;
  std::string fixtures_dir;  // replay mode: directory of <hash>.txt files

  void validate() const;  // throws ConfigError
};

/// Record of one prompt/response round trip, for the exchange log and
/// for replay auditing.
struct LlmExchange {
  std::string prompt_hash;
  std::string raw_response;
  std::optional<std::string> extracted;
  int attempts = 0;
};

std::string sha256_hex(const std::string& data);

/// Stable digest of (system_text, user_text); the replay fixture key.
std::string prompt_hash(const PromptBundle& bundle);

/// One chat-completion round trip. Live mode posts an OpenAI-compatible
/// request; replay mode reads fixtures_dir/<hash>.txt.
LlmExchange complete(const PromptBundle& bundle, const LlmClientConfig& cfg);

}  // namespace amlcheck::llm
