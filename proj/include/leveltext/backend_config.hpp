#pragma once

// Backend selection from a JSON file:
//
//   {"backends": [
//     {"role": "similarity", "kind": "http", "endpoint": "http://localhost:8001",
//      "timeout_s": 30, "max_retries": 3},
//     {"role": "judge", "kind": "mock", "model_name": "mock-judge-a"},
//     ...]}
//
// Roles: morph, tokenizer, similarity, entailment, policy, judge (repeatable).
// Missing roles fall back to the mock implementation. Environment overrides:
// LEVELTEXT_<ROLE>_ENDPOINT / LEVELTEXT_<ROLE>_MODEL, with JUDGE, JUDGE2, ...
// addressing the judges in order. Setting an endpoint switches that role to http.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "leveltext/backends.hpp"
#include "leveltext/resources.hpp"

namespace leveltext {

enum class BackendKind { mock, http };

struct BackendEntry {
  std::string role;
  BackendKind kind = BackendKind::mock;
  std::string endpoint;
  std::string model_name;
  double timeout_s = 60.0;
  int max_retries = 3;
  std::optional<bool> concurrent;        // default: http true, mock true
  std::string api_key_env = "LEVELTEXT_API_KEY";
};

struct BackendConfig {
  std::vector<BackendEntry> entries;

  // The default: everything mock, two judges.
  static BackendConfig mock();
  static BackendConfig from_json(const nlohmann::json& j);
  static BackendConfig load(const std::filesystem::path& path);

  nlohmann::json to_json() const;
  const BackendEntry* find(const std::string& role, std::size_t nth = 0) const;
  std::size_t count(const std::string& role) const;

  // getenv is injectable for tests.
  using EnvLookup = std::optional<std::string> (*)(const char*);
  void apply_env_overrides(EnvLookup env = nullptr);
};

BackendSuite build_suite(const BackendConfig& config,
                         std::shared_ptr<const ResourceBundle> bundle);

}  // namespace leveltext
