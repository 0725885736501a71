#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "cosmo/agents.hpp"

namespace cosmo {
namespace {

bool transient_status(int status) { return status == 408 || status == 429 || status >= 500; }

std::string extract_content(const std::string& body) {
  Json reply;
  try {
    reply = Json::parse(body);
  } catch (const std::exception& e) {
    throw AgentBackendError(BackendErrorCategory::Malformed,
                            std::string("completion body is not JSON: ") + e.what());
  }
  try {
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const std::exception&) {
    throw AgentBackendError(BackendErrorCategory::Malformed,
                            "completion body lacks choices[0].message.content");
  }
}

}  // namespace

std::string llm_complete(const EndpointConfig& endpoint, const std::string& prompt) {
  Json body = Json::object();
  body["model"] = endpoint.model;
  Json message = Json::object();
  message["role"] = "user";
  message["content"] = prompt;
  body["messages"] = Json::array({message});
  body["temperature"] = endpoint.temperature;
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!endpoint.api_key_env.empty()) {
    if (const char* key = std::getenv(endpoint.api_key_env.c_str()); key != nullptr && *key) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }

  const auto secs = static_cast<time_t>(endpoint.timeout_s);
  const auto usecs = static_cast<time_t>((endpoint.timeout_s - static_cast<double>(secs)) * 1e6);

  for (int attempt = 0;; ++attempt) {
    httplib::Client client(endpoint.base_url);
    if (!client.is_valid()) {
      throw AgentBackendError(BackendErrorCategory::Http,
                              "unsupported endpoint URL " + endpoint.base_url);
    }
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);

    auto res = client.Post(endpoint.path, headers, payload, "application/json");
    const bool last = attempt >= endpoint.max_retries;
    if (!res) {
      if (last) {
        throw AgentBackendError(BackendErrorCategory::Timeout,
                                "no response from " + endpoint.base_url + endpoint.path + ": " +
                                    httplib::to_string(res.error()));
      }
    } else if (res->status >= 200 && res->status < 300) {
      return extract_content(res->body);
    } else if (last || !transient_status(res->status)) {
      throw AgentBackendError(BackendErrorCategory::Http,
                              "HTTP " + std::to_string(res->status) + " from " +
                                  endpoint.base_url + endpoint.path,
                              res->status);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(endpoint.backoff_ms) * (1 << attempt));
  }
}

}  // namespace cosmo
