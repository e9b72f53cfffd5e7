#include "leveltext/http_backends.hpp"

#include <cmath>

#include "httplib.h"
#include "leveltext/errors.hpp"

namespace leveltext {

namespace {

// Splits "http://host:port/prefix" into origin and path prefix.
std::pair<std::string, std::string> split_url(const std::string& url) {
  auto scheme = url.find("://");
  if (scheme == std::string::npos) throw Error("endpoint URL needs a scheme: " + url);
  if (url.compare(0, scheme, "http") != 0) {
    throw Error("only http:// endpoints are supported: " + url);
  }
  auto path = url.find('/', scheme + 3);
  if (path == std::string::npos) return {url, ""};
  std::string prefix = url.substr(path);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {url.substr(0, path), prefix};
}

}  // namespace

HttpJsonClient::HttpJsonClient(HttpEndpoint endpoint) : endpoint_(std::move(endpoint)) {
  std::tie(origin_, prefix_) = split_url(endpoint_.base_url);
}

HttpJsonClient::~HttpJsonClient() = default;

nlohmann::json HttpJsonClient::post_once(const std::string& path,
                                         const nlohmann::json& body) const {
  httplib::Client cli(origin_);
  auto secs = static_cast<time_t>(endpoint_.timeout_s);
  auto usecs = static_cast<time_t>((endpoint_.timeout_s - std::floor(endpoint_.timeout_s)) * 1e6);
  cli.set_connection_timeout(secs, usecs);
  cli.set_read_timeout(secs, usecs);
  cli.set_write_timeout(secs, usecs);
  httplib::Headers headers;
  if (!endpoint_.api_key.empty()) headers.emplace("Authorization", "Bearer " + endpoint_.api_key);
  auto res = cli.Post(prefix_ + path, headers, body.dump(), "application/json");
  if (!res) {
    throw RetryableError("POST " + endpoint_.base_url + path + " failed: " +
                         httplib::to_string(res.error()));
  }
  if (res->status == 429 || res->status >= 500) {
    throw RetryableError("POST " + endpoint_.base_url + path + " returned HTTP " +
                         std::to_string(res->status));
  }
  if (res->status != 200) {
    throw Error("POST " + endpoint_.base_url + path + " returned HTTP " +
                std::to_string(res->status) + ": " + res->body);
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid JSON from " + endpoint_.base_url + path + ": " + e.what());
  }
}

nlohmann::json HttpJsonClient::post(const std::string& path, const nlohmann::json& body) const {
  RetryPolicy policy;
  policy.max_attempts = std::max(1, endpoint_.max_retries);
  return with_retries(policy, [&] { return post_once(path, body); });
}

std::string HttpChatClient::complete(std::string_view prompt, double temperature,
                                     std::uint64_t seed) const {
  if (prompt.empty()) throw PreconditionError("empty prompt");
  nlohmann::json body = {
      {"model", client_.endpoint().model_name},
      {"messages", nlohmann::json::array({{{"role", "user"}, {"content", std::string(prompt)}}})},
      {"temperature", temperature},
      {"seed", seed}};
  auto res = client_.post("/v1/chat/completions", body);
  try {
    return res.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("unexpected chat completion response: ") + e.what());
  }
}

std::string HttpChatClient::id() const {
  const auto& ep = client_.endpoint();
  return ep.model_name.empty() ? "http-chat:" + ep.base_url : ep.model_name;
}

double HttpSimilarity::score(std::string_view reference, std::string_view candidate) const {
  auto res = client_.post("/similarity", {{"reference", std::string(reference)},
                                          {"candidate", std::string(candidate)}});
  double s = res.at("score").get<double>();
  if (!(s >= 0.0 && s <= 1.0)) throw Error("similarity service returned out-of-range score");
  return s;
}

bool HttpEntailment::entails(std::string_view premise, std::string_view hypothesis) const {
  auto res = client_.post("/entailment", {{"premise", std::string(premise)},
                                          {"hypothesis", std::string(hypothesis)}});
  return res.at("entailment").get<bool>();
}

MorphAnalysis morph_analysis_from_json(const nlohmann::json& j) {
  MorphAnalysis a;
  try {
    for (const auto& t : j.at("tokens")) {
      MorphToken tok{t.at("surface").get<std::string>(), t.at("lemma").get<std::string>(),
                     parse_pos(t.at("pos").get<std::string>()), t.value("is_stop", false)};
      if (tok.surface.empty()) throw Error("analyzer returned an empty token");
      a.tokens.push_back(std::move(tok));
    }
    a.sentence_ends = j.at("sentence_ends").get<std::vector<std::size_t>>();
    a.sentences = j.at("sentences").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed analyzer response: ") + e.what());
  }
  std::size_t prev = 0;
  for (std::size_t e : a.sentence_ends) {
    if (e <= prev || e > a.tokens.size()) throw Error("analyzer sentence_ends do not partition tokens");
    prev = e;
  }
  if (prev != a.tokens.size() || a.sentences.size() != a.sentence_ends.size()) {
    throw Error("analyzer sentence_ends do not partition tokens");
  }
  return a;
}

nlohmann::json morph_analysis_to_json(const MorphAnalysis& a) {
  nlohmann::json toks = nlohmann::json::array();
  for (const auto& t : a.tokens) {
    toks.push_back({{"surface", t.surface},
                    {"lemma", t.lemma},
                    {"pos", std::string(to_string(t.pos))},
                    {"is_stop", t.is_stop}});
  }
  return {{"tokens", toks}, {"sentence_ends", a.sentence_ends}, {"sentences", a.sentences}};
}

MorphAnalysis HttpMorphAnalyzer::analyze(std::string_view text, Language lang) const {
  return morph_analysis_from_json(client_.post(
      "/analyze", {{"text", std::string(text)}, {"language", std::string(language_code(lang))}}));
}

std::size_t HttpTokenizer::count(std::string_view text) const {
  return client_.post("/count", {{"text", std::string(text)}}).at("count").get<std::size_t>();
}

std::vector<TokenId> HttpTokenizer::encode(std::string_view text) const {
  return client_.post("/encode", {{"text", std::string(text)}})
      .at("ids")
      .get<std::vector<TokenId>>();
}

std::string HttpTokenizer::detokenize(std::span<const TokenId> ids) const {
  std::vector<TokenId> v(ids.begin(), ids.end());
  return client_.post("/detokenize", {{"ids", v}}).at("text").get<std::string>();
}

}  // namespace leveltext
