#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "amlcheck/llm/client.hpp"

namespace amlcheck::llm {

void LlmClientConfig::validate() const {
  if (mode == Mode::Replay) {
    if (fixtures_dir.empty())
      throw ConfigError("replay mode requires a fixtures directory");
    if (!std::filesystem::is_directory(fixtures_dir))
      throw ConfigError("fixtures directory does not exist: " + fixtures_dir);
  } else {
    if (api_key_env_var.empty())
      throw ConfigError("live mode requires an API key environment variable name");
    const char* key = std::getenv(api_key_env_var.c_str());
    if (!key || !*key)
      throw ConfigError("environment variable " + api_key_env_var + " is not set");
    if (endpoint_url.rfind("http://", 0) != 0 && endpoint_url.rfind("https://", 0) != 0)
      throw ConfigError("endpoint URL must be http(s): " + endpoint_url);
  }
  if (max_retries < 0) throw ConfigError("max_retries must be non-negative");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string prompt_hash(const PromptBundle& bundle) {
  return sha256_hex(bundle.system_text + '\0' + bundle.user_text);
}

namespace {

std::string replay_lookup(const std::string& hash, const LlmClientConfig& cfg) {
  std::filesystem::path path = std::filesystem::path(cfg.fixtures_dir) / (hash + ".txt");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFixture(hash);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string live_call(const PromptBundle& bundle, const LlmClientConfig& cfg) {
  const char* key = std::getenv(cfg.api_key_env_var.c_str());

  auto path_start = cfg.endpoint_url.find('/', cfg.endpoint_url.find("://") + 3);
  std::string origin =
      path_start == std::string::npos ? cfg.endpoint_url : cfg.endpoint_url.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/" : cfg.endpoint_url.substr(path_start);

  nlohmann::json request = {
      {"model", cfg.model_name},
      {"messages",
       {{{"role", "system"}, {"content", bundle.system_text}},
        {{"role", "user"}, {"content", bundle.user_text}}}},
      {"temperature", cfg.temperature},
  };

  httplib::Client client(origin);
  client.set_connection_timeout(cfg.timeout_seconds, 0);
  client.set_read_timeout(cfg.timeout_seconds, 0);
  client.set_write_timeout(cfg.timeout_seconds, 0);
  httplib::Headers headers = {{"Authorization", std::string("Bearer ") + key}};

  auto response = client.Post(path, headers, request.dump(), "application/json");
  if (!response) {
    auto err = response.error();
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
        err == httplib::Error::Write)
      throw TimeoutError("chat completion request timed out: " + httplib::to_string(err));
    throw NetworkError("chat completion request failed: " + httplib::to_string(err));
  }
  if (response->status != 200) throw HttpStatusError(response->status, response->body);

  try {
    auto body = nlohmann::json::parse(response->body);
    return body.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw NetworkError(std::string("malformed chat completion response: ") + e.what());
  }
}

}  // namespace

LlmExchange complete(const PromptBundle& bundle, const LlmClientConfig& cfg) {
  cfg.validate();
  LlmExchange exchange;
  exchange.prompt_hash = prompt_hash(bundle);
  exchange.attempts = 1;
  exchange.raw_response = cfg.mode == LlmClientConfig::Mode::Replay
                              ? replay_lookup(exchange.prompt_hash, cfg)
                              : live_call(bundle, cfg);
  return exchange;
}

}  // namespace amlcheck::llm
