#pragma once

// Remote backends over HTTP/JSON. Transport failures, 429 and 5xx responses
// are retried with exponential backoff; other errors propagate at once.

#include <memory>
#include <string>

#include "json.hpp"
#include "leveltext/backends.hpp"

namespace leveltext {

struct HttpEndpoint {
  std::string base_url;  // e.g. http://localhost:8000 or http://host:port/prefix
  std::string model_name;
  std::string api_key;
  double timeout_s = 60.0;
  int max_retries = 3;
  bool concurrent = true;
};

class HttpJsonClient {
 public:
  explicit HttpJsonClient(HttpEndpoint endpoint);
  ~HttpJsonClient();
  HttpJsonClient(const HttpJsonClient&) = delete;
  HttpJsonClient& operator=(const HttpJsonClient&) = delete;

  nlohmann::json post(const std::string& path, const nlohmann::json& body) const;
  const HttpEndpoint& endpoint() const { return endpoint_; }

 private:
  nlohmann::json post_once(const std::string& path, const nlohmann::json& body) const;

  HttpEndpoint endpoint_;
  std::string origin_;
  std::string prefix_;
};

// OpenAI-compatible chat completions: POST {base}/v1/chat/completions.
class HttpChatClient final : public ChatModelClient {
 public:
  explicit HttpChatClient(HttpEndpoint endpoint) : client_(std::move(endpoint)) {}
  std::string complete(std::string_view prompt, double temperature,
                       std::uint64_t seed) const override;
  bool concurrent() const override { return client_.endpoint().concurrent; }
  std::string id() const override;

 private:
  HttpJsonClient client_;
};

// POST {base}/similarity {reference, candidate} -> {score}
class HttpSimilarity final : public SimilarityScorer {
 public:
  explicit HttpSimilarity(HttpEndpoint endpoint) : client_(std::move(endpoint)) {}
  double score(std::string_view reference, std::string_view candidate) const override;
  bool concurrent() const override { return client_.endpoint().concurrent; }
  std::string id() const override { return "http-similarity:" + client_.endpoint().base_url; }

 private:
  HttpJsonClient client_;
};

// POST {base}/entailment {premise, hypothesis} -> {entailment: bool}
class HttpEntailment final : public EntailmentPredictor {
 public:
  explicit HttpEntailment(HttpEndpoint endpoint) : client_(std::move(endpoint)) {}
  bool entails(std::string_view premise, std::string_view hypothesis) const override;
  bool concurrent() const override { return client_.endpoint().concurrent; }
  std::string id() const override { return "http-entailment:" + client_.endpoint().base_url; }

 private:
  HttpJsonClient client_;
};

// POST {base}/analyze {text, language}
//   -> {tokens: [{surface, lemma, pos, is_stop}], sentence_ends: [..], sentences: [..]}
class HttpMorphAnalyzer final : public MorphAnalyzer {
 public:
  explicit HttpMorphAnalyzer(HttpEndpoint endpoint) : client_(std::move(endpoint)) {}
  MorphAnalysis analyze(std::string_view text, Language lang) const override;
  bool concurrent() const override { return client_.endpoint().concurrent; }
  std::string id() const override { return "http-morph:" + client_.endpoint().base_url; }

 private:
  HttpJsonClient client_;
};

// POST {base}/count {text} -> {count}; /encode {text} -> {ids}; /detokenize {ids} -> {text}
class HttpTokenizer final : public SubwordTokenizer {
 public:
  explicit HttpTokenizer(HttpEndpoint endpoint) : client_(std::move(endpoint)) {}
  std::size_t count(std::string_view text) const override;
  std::vector<TokenId> encode(std::string_view text) const override;
  std::string detokenize(std::span<const TokenId> ids) const override;
  bool concurrent() const override { return client_.endpoint().concurrent; }
  std::string id() const override { return "http-tokenizer:" + client_.endpoint().base_url; }

 private:
  HttpJsonClient client_;
};

// Validates a morph analysis received from a remote service.
MorphAnalysis morph_analysis_from_json(const nlohmann::json& j);
nlohmann::json morph_analysis_to_json(const MorphAnalysis& a);

}  // namespace leveltext
