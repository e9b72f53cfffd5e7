#include <atomic>
#include <map>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "leveltext/backend_config.hpp"
#include "leveltext/http_backends.hpp"
#include "leveltext/prompts.hpp"
#include "test_support.hpp"

using namespace leveltext;

namespace {

// Local stand-in for the remote services. The first `fail_first` requests
// get a 503.
struct FakeService {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> requests{0};
  int fail_first = 0;
  std::string last_auth;
  nlohmann::json last_body;

  FakeService() {
    auto guard = [this](const httplib::Request& req, httplib::Response& res) {
      last_auth = req.get_header_value("Authorization");
      last_body = nlohmann::json::parse(req.body);
      if (requests++ < fail_first) {
        res.status = 503;
        return false;
      }
      return true;
    };
    auto reply = [](httplib::Response& res, const nlohmann::json& j) {
      res.set_content(j.dump(), "application/json");
    };
    server.Post("/v1/chat/completions", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      std::string content = last_body["messages"][0]["content"];
      reply(res, {{"choices", {{{"message", {{"content", "echo:" + content.substr(0, 5)}}}}}}});
    });
    server.Post("/similarity", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      reply(res, {{"score", last_body["reference"] == last_body["candidate"] ? 1.0 : 0.25}});
    });
    server.Post("/bad_similarity/similarity", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      reply(res, {{"score", 7.0}});
    });
    server.Post("/entailment", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      reply(res, {{"entailment", last_body["premise"] == last_body["hypothesis"]}});
    });
    server.Post("/analyze", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      MorphAnalysis a;
      a.tokens = {{"Dogs", "dog", Pos::NOUN, false}, {".", ".", Pos::PUNCT, false}};
      a.sentence_ends = {2};
      a.sentences = {"Dogs."};
      reply(res, morph_analysis_to_json(a));
    });
    server.Post("/count", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      reply(res, {{"count", 3}});
    });
    server.Post("/encode", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      reply(res, {{"ids", {1, 2, 3}}});
    });
    server.Post("/detokenize", [=, this](const auto& req, auto& res) {
      if (!guard(req, res)) return;
      reply(res, {{"text", "x" + std::to_string(last_body["ids"].size())}});
    });
    server.Post("/forbidden/similarity", [=, this](const auto& req, auto& res) {
      guard(req, res);
      res.status = 403;
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~FakeService() {
    server.stop();
    thread.join();
  }
  HttpEndpoint endpoint(std::string prefix = "") const {
    HttpEndpoint e;
    e.base_url = "http://127.0.0.1:" + std::to_string(port) + prefix;
    e.timeout_s = 5;
    return e;
  }
};

std::optional<std::string> fake_env(const char* name) {
  static const std::map<std::string, std::string> vars = {
      {"LEVELTEXT_SIMILARITY_ENDPOINT", "http://127.0.0.1:9/sim"},
      {"LEVELTEXT_JUDGE2_MODEL", "other-judge"},
      {"LEVELTEXT_POLICY_MODEL", "policy-x"}};
  auto it = vars.find(name);
  if (it == vars.end()) return std::nullopt;
  return it->second;
}

}  // namespace

TEST_CASE("http clients speak the documented JSON shapes") {
  FakeService svc;
  auto ep = svc.endpoint();
  ep.model_name = "m1";
  ep.api_key = "secret";
  HttpChatClient chat(ep);
  CHECK(chat.complete("hello world", 0.0, 42) == "echo:hello");
  CHECK(svc.last_body["model"] == "m1");
  CHECK(svc.last_body["seed"] == 42);
  CHECK(svc.last_auth == "Bearer secret");
  CHECK(chat.id() == "m1");
  CHECK_THROWS_AS(chat.complete("", 0.0, 1), PreconditionError);

  HttpSimilarity sim(svc.endpoint());
  CHECK(sim.score("a", "a") == 1.0);
  CHECK(sim.score("a", "b") == 0.25);
  HttpEntailment nli(svc.endpoint());
  CHECK(nli.entails("a", "a"));
  CHECK(!nli.entails("a", "b"));
  HttpMorphAnalyzer morph(svc.endpoint());
  auto a = morph.analyze("Dogs.", Language::en);
  CHECK(a.tokens.size() == 2);
  CHECK(a.tokens[0].lemma == "dog");
  HttpTokenizer tok(svc.endpoint());
  CHECK(tok.count("x") == 3);
  CHECK(tok.encode("x") == std::vector<TokenId>{1, 2, 3});
  std::vector<TokenId> ids = {5, 6};
  CHECK(tok.detokenize(ids) == "x2");
}

TEST_CASE("5xx is retried, 4xx is not") {
  FakeService svc;
  svc.fail_first = 2;
  HttpSimilarity sim(svc.endpoint());
  CHECK(sim.score("a", "a") == 1.0);
  CHECK(svc.requests == 3);

  FakeService always;
  always.fail_first = 100;
  auto ep = always.endpoint();
  ep.max_retries = 2;
  HttpSimilarity dead(ep);
  CHECK_THROWS_AS(dead.score("a", "a"), RetryableError);
  CHECK(always.requests == 2);

  HttpSimilarity forbidden(svc.endpoint("/forbidden"));
  int before = svc.requests;
  CHECK_THROWS_AS(forbidden.score("a", "a"), Error);
  CHECK(svc.requests == before + 1);

  HttpSimilarity bad(svc.endpoint("/bad_similarity"));
  CHECK_THROWS_AS(bad.score("a", "b"), Error);
}

TEST_CASE("unreachable endpoints fail with a retryable error") {
  HttpEndpoint ep;
  ep.base_url = "http://127.0.0.1:9";
  ep.timeout_s = 0.5;
  ep.max_retries = 1;
  CHECK_THROWS_AS(HttpSimilarity(ep).score("a", "b"), RetryableError);
  ep.base_url = "https://example.org";
  CHECK_THROWS_AS(HttpSimilarity{ep}, Error);
}

TEST_CASE("morph analysis json is validated") {
  auto bad = nlohmann::json::parse(
      R"({"tokens":[{"surface":"a","lemma":"a","pos":"NOUN"}],"sentence_ends":[2],"sentences":["a"]})");
  CHECK_THROWS_AS(morph_analysis_from_json(bad), Error);
  auto bad_pos = nlohmann::json::parse(
      R"({"tokens":[{"surface":"a","lemma":"a","pos":"WAT"}],"sentence_ends":[1],"sentences":["a"]})");
  CHECK_THROWS(morph_analysis_from_json(bad_pos));
  MorphAnalysis a;
  a.tokens = {{"x", "x", Pos::VERB, true}};
  a.sentence_ends = {1};
  a.sentences = {"x"};
  auto back = morph_analysis_from_json(morph_analysis_to_json(a));
  CHECK(back.tokens == a.tokens);
}

TEST_CASE("retry helper backs off and rethrows the last error") {
  int calls = 0;
  RetryPolicy p{3, std::chrono::milliseconds(1)};
  CHECK(with_retries(p, [&] {
          if (++calls < 3) throw RetryableError("x");
          return 7;
        }) == 7);
  calls = 0;
  CHECK_THROWS_AS(with_retries(p, [&]() -> int {
                    ++calls;
                    throw RetryableError("x");
                  }),
                  RetryableError);
  CHECK(calls == 3);
  calls = 0;
  CHECK_THROWS_AS(with_retries(p, [&]() -> int {
                    ++calls;
                    throw Error("hard");
                  }),
                  Error);
  CHECK(calls == 1);
}

TEST_CASE("backend config: defaults, json, validation and env overrides") {
  auto m = BackendConfig::mock();
  CHECK(m.count("judge") == 2);
  CHECK(m.find("policy")->model_name == "mock-judge-a");
  auto back = BackendConfig::from_json(m.to_json());
  CHECK(back.to_json() == m.to_json());

  CHECK_THROWS_AS(BackendConfig::from_json(nlohmann::json::parse(R"({"backends":[{"role":"oracle"}]})")),
                  Error);
  CHECK_THROWS_AS(BackendConfig::from_json(nlohmann::json::parse(
                      R"({"backends":[{"role":"judge","kind":"http","endpoint":"http://x","timeout_s":0}]})")),
                  Error);
  CHECK_THROWS_AS(BackendConfig::from_json(nlohmann::json::parse(
                      R"({"backends":[{"role":"morph"},{"role":"morph"}]})")),
                  Error);

  m.apply_env_overrides(fake_env);
  REQUIRE(m.find("similarity"));
  CHECK(m.find("similarity")->kind == BackendKind::http);
  CHECK(m.find("similarity")->endpoint == "http://127.0.0.1:9/sim");
  CHECK(m.find("judge", 1)->model_name == "other-judge");
  CHECK(m.find("judge", 0)->model_name == "mock-judge-a");
  CHECK(m.find("policy")->model_name == "policy-x");

  auto shipped = BackendConfig::load(testsupport::data_dir() / "config/backends.http.example.json");
  CHECK(shipped.count("judge") >= 1);
}

TEST_CASE("build_suite: mock config shares the policy with the first judge") {
  auto s = build_suite(BackendConfig::mock(), testsupport::bundle());
  REQUIRE(s.judges.size() == 2);
  CHECK(s.policy == s.judges[0]);
  CHECK(s.judges[0]->id() != s.judges[1]->id());
  CHECK(s.morph);
  CHECK(s.tokenizer);
  BackendConfig empty;
  auto d = build_suite(empty, testsupport::bundle());
  CHECK(d.similarity);
  CHECK(d.judges.size() >= 1);
}

TEST_CASE("build_suite wires http backends") {
  FakeService svc;
  auto cfg = BackendConfig::from_json({{"backends",
                                        {{{"role", "similarity"}, {"kind", "http"},
                                          {"endpoint", svc.endpoint().base_url}}}}});
  auto s = build_suite(cfg, testsupport::bundle());
  CHECK(s.similarity->score("q", "q") == 1.0);
}

TEST_CASE("non-concurrent backends are serialized") {
  struct Flagged final : SimilarityScorer {
    mutable std::atomic<int> inside{0};
    mutable std::atomic<int> max_inside{0};
    double score(std::string_view, std::string_view) const override {
      int now = ++inside;
      int prev = max_inside.load();
      while (now > prev && !max_inside.compare_exchange_weak(prev, now)) {
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
      --inside;
      return 0.5;
    }
    bool concurrent() const override { return false; }
    std::string id() const override { return "flagged"; }
  };
  auto raw = std::make_shared<Flagged>();
  auto wrapped = serialized(std::shared_ptr<const SimilarityScorer>(raw));
  std::vector<std::thread> ts;
  for (int i = 0; i < 8; ++i) ts.emplace_back([&] { wrapped->score("a", "b"); });
  for (auto& t : ts) t.join();
  CHECK(raw->max_inside == 1);
}

TEST_CASE("mock tokenizer round trip and counting") {
  MockTokenizer tok(*testsupport::bundle());
  CHECK(tok.count("the cat  sat") == 3);
  CHECK(tok.count("会議は") == 3);
  CHECK(tok.count("회의가 연기되었다") == 2);
  std::string s = "The zqx river,  was   wide.";
  CHECK(tok.detokenize(tok.encode(s)) == "The zqx river, was wide.");
}

TEST_CASE("mock policy only substitutes toward easier words") {
  const auto& policy = *testsupport::mock_suite().policy;
  std::string orig = "Numerous families commenced trade with merchants along the river.";
  auto out = policy.complete(render_simplify_prompt(Language::en, 0, orig), 0.0, 42);
  CHECK(out == policy.complete(render_simplify_prompt(Language::en, 0, orig), 0.0, 42));
  CHECK(out != orig);
  // nothing above the target: unchanged
  std::string easy = "The dog runs.";
  CHECK(policy.complete(render_simplify_prompt(Language::en, 0, easy), 0.0, 42) == easy);
}

TEST_CASE("mock similarity and entailment") {
  MockSimilarity sim;
  CHECK(sim.score("a b c", "a b c") == 1.0);
  CHECK(sim.score("a b", "c d") == 0.0);
  CHECK(sim.score("a b c d", "a b") == doctest::Approx(2.0 / 3.0));
  MockEntailment nli;
  CHECK(nli.entails("a b c", "a c"));
  CHECK(!nli.entails("a c", "a b c"));
  CHECK(nli.entails("x", "x"));
}
