#include "leveltext/backend_config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>

#include "leveltext/errors.hpp"
#include "leveltext/http_backends.hpp"
#include "leveltext/mock_backends.hpp"

namespace leveltext {

namespace {

const std::vector<std::string> kRoles = {"morph",      "tokenizer", "similarity",
                                         "entailment", "policy",    "judge"};

std::optional<std::string> real_getenv(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

BackendEntry entry(const std::string& role) {
  BackendEntry e;
  e.role = role;
  return e;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

HttpEndpoint to_endpoint(const BackendEntry& e) {
  if (e.endpoint.empty()) throw Error("http backend for role '" + e.role + "' has no endpoint");
  HttpEndpoint ep;
  ep.base_url = e.endpoint;
  ep.model_name = e.model_name;
  ep.timeout_s = e.timeout_s;
  ep.max_retries = e.max_retries;
  ep.concurrent = e.concurrent.value_or(true);
  if (!e.api_key_env.empty()) {
    if (auto k = real_getenv(e.api_key_env.c_str())) ep.api_key = *k;
  }
  return ep;
}

}  // namespace

BackendConfig BackendConfig::mock() {
  BackendConfig c;
  for (const auto& r : kRoles) c.entries.push_back(entry(r));
  for (auto& e : c.entries) {
    if (e.role == "policy" || e.role == "judge") e.model_name = "mock-judge-a";
  }
  c.entries.push_back(entry("judge"));
  c.entries.back().model_name = "mock-judge-b";
  return c;
}

BackendConfig BackendConfig::from_json(const nlohmann::json& j) {
  BackendConfig c;
  try {
    for (const auto& b : j.at("backends")) {
      BackendEntry e;
      e.role = b.at("role").get<std::string>();
      if (std::find(kRoles.begin(), kRoles.end(), e.role) == kRoles.end()) {
        throw Error("unknown backend role '" + e.role + "'");
      }
      auto kind = b.value("kind", std::string("mock"));
      if (kind == "mock") e.kind = BackendKind::mock;
      else if (kind == "http") e.kind = BackendKind::http;
      else throw Error("unknown backend kind '" + kind + "'");
      e.endpoint = b.value("endpoint", std::string());
      e.model_name = b.value("model_name", std::string());
      e.timeout_s = b.value("timeout_s", 60.0);
      e.max_retries = b.value("max_retries", 3);
      if (b.contains("concurrent")) e.concurrent = b.at("concurrent").get<bool>();
      e.api_key_env = b.value("api_key_env", std::string("LEVELTEXT_API_KEY"));
      if (e.timeout_s <= 0) throw Error("timeout_s must be positive");
      if (e.max_retries < 1) throw Error("max_retries must be >= 1");
      if (e.role != "judge" && c.find(e.role)) throw Error("duplicate backend role '" + e.role + "'");
      c.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed backend config: ") + ex.what());
  }
  return c;
}

BackendConfig BackendConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open backend config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("malformed backend config " + path.string() + ": " + ex.what());
  }
  return from_json(j);
}

nlohmann::json BackendConfig::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json b = {{"role", e.role},
                        {"kind", e.kind == BackendKind::http ? "http" : "mock"},
                        {"timeout_s", e.timeout_s},
                        {"max_retries", e.max_retries}};
    if (!e.endpoint.empty()) b["endpoint"] = e.endpoint;
    if (!e.model_name.empty()) b["model_name"] = e.model_name;
    if (e.concurrent) b["concurrent"] = *e.concurrent;
    arr.push_back(b);
  }
  return {{"backends", arr}};
}

const BackendEntry* BackendConfig::find(const std::string& role, std::size_t nth) const {
  for (const auto& e : entries) {
    if (e.role != role) continue;
    if (nth == 0) return &e;
    --nth;
  }
  return nullptr;
}

std::size_t BackendConfig::count(const std::string& role) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.role == role;
  return n;
}

void BackendConfig::apply_env_overrides(EnvLookup env) {
  if (!env) env = real_getenv;
  auto apply = [&](BackendEntry& e, const std::string& prefix) {
    if (auto v = env((prefix + "_ENDPOINT").c_str())) {
      e.endpoint = *v;
      e.kind = BackendKind::http;
    }
    if (auto v = env((prefix + "_MODEL").c_str())) e.model_name = *v;
  };
  for (const auto& role : kRoles) {
    if (role == "judge") continue;
    auto prefix = "LEVELTEXT_" + upper(role);
    bool present = false;
    for (auto& e : entries) {
      if (e.role == role) {
        apply(e, prefix);
        present = true;
      }
    }
    if (!present && env((prefix + "_ENDPOINT").c_str())) {
      entries.push_back(entry(role));
      apply(entries.back(), prefix);
    }
  }
  std::size_t idx = 0;
  for (auto& e : entries) {
    if (e.role != "judge") continue;
    apply(e, idx == 0 ? "LEVELTEXT_JUDGE" : "LEVELTEXT_JUDGE" + std::to_string(idx + 1));
    ++idx;
  }
}

BackendSuite build_suite(const BackendConfig& config,
                         std::shared_ptr<const ResourceBundle> bundle) {
  if (!bundle) throw PreconditionError("build_suite needs a resource bundle");
  BackendSuite suite;
  std::shared_ptr<const MockMorphAnalyzer> mock_morph;
  std::shared_ptr<const Canonicalizer> canon;
  auto get_mock_morph = [&] {
    if (!mock_morph) mock_morph = std::make_shared<MockMorphAnalyzer>(bundle);
    return mock_morph;
  };
  auto get_canon = [&] {
    if (!canon) canon = std::make_shared<Canonicalizer>(*bundle);
    return canon;
  };

  auto kind_of = [&](const std::string& role) {
    const auto* e = config.find(role);
    return e ? e->kind : BackendKind::mock;
  };

  if (kind_of("morph") == BackendKind::http) {
    suite.morph = std::make_shared<HttpMorphAnalyzer>(to_endpoint(*config.find("morph")));
  } else {
    suite.morph = get_mock_morph();
  }
  if (kind_of("tokenizer") == BackendKind::http) {
    suite.tokenizer = std::make_shared<HttpTokenizer>(to_endpoint(*config.find("tokenizer")));
  } else {
    suite.tokenizer = std::make_shared<MockTokenizer>(*bundle);
  }
  if (kind_of("similarity") == BackendKind::http) {
    suite.similarity = std::make_shared<HttpSimilarity>(to_endpoint(*config.find("similarity")));
  } else {
    suite.similarity = std::make_shared<MockSimilarity>(get_canon());
  }
  if (kind_of("entailment") == BackendKind::http) {
    suite.entailment = std::make_shared<HttpEntailment>(to_endpoint(*config.find("entailment")));
  } else {
    suite.entailment = std::make_shared<MockEntailment>(get_canon());
  }

  // Chat instances with the same kind, endpoint and model share one object,
  // so a model used as both policy and judge is serialized through one lock.
  std::map<std::string, std::shared_ptr<const ChatModelClient>> chats;
  auto chat_for = [&](const BackendEntry& e, const std::string& fallback_name)
      -> std::shared_ptr<const ChatModelClient> {
    std::string name = e.model_name.empty() ? fallback_name : e.model_name;
    std::string key = (e.kind == BackendKind::http ? "http|" + e.endpoint : "mock") + "|" + name;
    auto it = chats.find(key);
    if (it != chats.end()) return it->second;
    std::shared_ptr<const ChatModelClient> c;
    if (e.kind == BackendKind::http) {
      auto named = e;
      named.model_name = name;
      c = std::make_shared<HttpChatClient>(to_endpoint(named));
    } else {
      c = std::make_shared<MockChatModel>(bundle, get_mock_morph(), MockChatOptions{name});
    }
    chats.emplace(key, c);
    return c;
  };

  std::size_t njudges = config.count("judge");
  if (njudges == 0) {
    suite.judges.push_back(chat_for(entry("judge"), "mock-judge-a"));
    suite.judges.push_back(chat_for(entry("judge"), "mock-judge-b"));
  } else {
    for (std::size_t i = 0; i < njudges; ++i) {
      suite.judges.push_back(
          chat_for(*config.find("judge", i), "mock-judge-" + std::string(1, char('a' + i))));
    }
  }
  const auto* pe = config.find("policy");
  suite.policy = pe ? chat_for(*pe, "mock-judge-a") : suite.judges.front();
  return serialize_where_needed(std::move(suite));
}

}  // namespace leveltext
