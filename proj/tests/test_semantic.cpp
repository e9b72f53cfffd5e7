#include <algorithm>
#include <random>

#include "doctest.h"
#include "leveltext/semantic_preservation.hpp"
#include "test_support.hpp"

using namespace leveltext;
using testsupport::ConstEntailment;
using testsupport::SpySimilarity;

namespace {

using Span = std::pair<std::size_t, std::size_t>;

// Naive restatement of the rule: list every admissible span at the cursor,
// score them all, keep the first maximum.
std::vector<Span> naive_spans(const std::vector<std::string>& ref,
                              const std::vector<std::string>& cand, const SimilarityScorer& sim,
                              std::size_t max_span) {
  std::vector<Span> out;
  if (cand.size() < ref.size()) return out;
  if (cand.size() == ref.size()) {
    for (std::size_t i = 0; i < ref.size(); ++i) out.push_back({i, i + 1});
    return out;
  }
  std::size_t cur = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    std::vector<double> scores;
    for (std::size_t k = 1; k <= max_span; ++k) {
      std::size_t end = cur + k;
      std::size_t needed_after = ref.size() - 1 - i;
      if (end + needed_after > cand.size()) break;
      std::string joined = cand[cur];
      for (std::size_t j = cur + 1; j < end; ++j) joined += " " + cand[j];
      scores.push_back(sim.score(ref[i], joined));
    }
    auto best = std::max_element(scores.begin(), scores.end()) - scores.begin();
    std::size_t k = static_cast<std::size_t>(best) + 1;
    out.push_back({cur, cur + k});
    cur += k;
  }
  return out;
}

std::vector<std::string> random_sentences(std::mt19937_64& rng, std::size_t n) {
  static const char* words[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    std::size_t len = 1 + rng() % 5;
    for (std::size_t w = 0; w < len; ++w) {
      if (w) s += ' ';
      s += words[rng() % 8];
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("pair score table") {
  CHECK(pair_score(true, true) == 1.0);
  CHECK(pair_score(true, false) == 0.5);
  CHECK(pair_score(false, true) == 0.5);
  CHECK(pair_score(false, false) == 0.0);
}

TEST_CASE("gated when the candidate has fewer sentences") {
  SpySimilarity sim;
  ConstEntailment yes(true);
  std::vector<std::string> ref = {"a", "b", "c"}, cand = {"a b c"};
  auto r = semantic_reward_detail(ref, cand, sim, yes);
  CHECK(r.alignment.gated);
  CHECK(r.reward == 0.0);
  CHECK(sim.calls == 0);
}

TEST_CASE("identity alignment makes no similarity calls") {
  SpySimilarity sim;
  std::vector<std::string> ref = {"x y", "z"}, cand = {"q", "r"};
  auto a = align_greedy(ref, cand, sim);
  CHECK(sim.calls == 0);
  CHECK(a.similarity_calls == 0);
  REQUIRE(a.pairs.size() == 2);
  CHECK(a.pairs[1].cand_start == 1);
  CHECK(a.pairs[1].similarity == 1.0);
}

TEST_CASE("split sentences are joined back for the reference") {
  SpySimilarity sim;
  std::vector<std::string> ref = {"a b c d", "e f"};
  std::vector<std::string> cand = {"a b", "c d", "e f"};
  auto a = align_greedy(ref, cand, sim);
  REQUIRE(a.pairs.size() == 2);
  CHECK(a.pairs[0].cand_start == 0);
  CHECK(a.pairs[0].cand_end == 2);
  CHECK(a.pairs[0].joined_candidate == "a b c d");
  CHECK(a.pairs[1].cand_start == 2);
  CHECK(a.unconsumed.empty());
}

TEST_CASE("last reference picks by similarity and leaves the rest unconsumed") {
  SpySimilarity sim;
  std::vector<std::string> ref = {"a b c d"};
  std::vector<std::string> cand = {"a b", "c d", "z z"};
  auto a = align_greedy(ref, cand, sim);
  REQUIRE(a.pairs.size() == 1);
  CHECK(a.pairs[0].cand_end == 2);
  CHECK(a.unconsumed == std::vector<std::size_t>{2});
}

TEST_CASE("ties go to the shortest span") {
  testsupport::TableSimilarity sim;
  sim.fallback = 0.5;
  std::vector<std::string> ref = {"r", "s"}, cand = {"1", "2", "3", "4"};
  auto a = align_greedy(ref, cand, sim);
  CHECK(a.pairs[0].cand_end == 1);
  CHECK(a.pairs[1].cand_start == 1);
  CHECK(a.pairs[1].cand_end == 2);
  CHECK(a.unconsumed == std::vector<std::size_t>{2, 3});
}

TEST_CASE("max_span caps the span length") {
  SpySimilarity sim;
  std::vector<std::string> ref = {"a b c d e f"};
  std::vector<std::string> cand = {"a", "b", "c", "d", "e", "f"};
  auto a = align_greedy(ref, cand, sim, 4);
  CHECK(a.pairs[0].cand_end == 4);
  CHECK(sim.calls == 4);
  CHECK_THROWS_AS(align_greedy(ref, cand, sim, 0), PreconditionError);
  CHECK_THROWS_AS(align_greedy({}, cand, sim), PreconditionError);
}

TEST_CASE("property: greedy alignment matches the naive oracle") {
  std::mt19937_64 rng(21);
  MockSimilarity sim;
  for (int t = 0; t < 300; ++t) {
    auto ref = random_sentences(rng, 1 + rng() % 6);
    auto cand = random_sentences(rng, 1 + rng() % 12);
    std::size_t span = 1 + rng() % 5;
    auto a = align_greedy(ref, cand, sim, span);
    auto want = naive_spans(ref, cand, sim, span);
    std::vector<Span> got;
    for (const auto& p : a.pairs) got.push_back({p.cand_start, p.cand_end});
    CHECK(got == want);
  }
}

TEST_CASE("property: pairs partition a candidate prefix, unconsumed is the rest") {
  std::mt19937_64 rng(22);
  MockSimilarity sim;
  for (int t = 0; t < 300; ++t) {
    auto ref = random_sentences(rng, 1 + rng() % 6);
    auto cand = random_sentences(rng, ref.size() + rng() % 10);
    auto a = align_greedy(ref, cand, sim);
    REQUIRE(a.pairs.size() == ref.size());
    std::size_t cur = 0;
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
      CHECK(a.pairs[i].ref_index == i);
      CHECK(a.pairs[i].cand_start == cur);
      CHECK(a.pairs[i].cand_end > cur);
      CHECK(a.pairs[i].cand_end - cur <= kDefaultMaxSpan);
      cur = a.pairs[i].cand_end;
    }
    for (std::size_t j : a.unconsumed) CHECK(j == cur++);
    CHECK(cur == cand.size());
  }
}

TEST_CASE("property: reward is the mean of pair scores, in [0, 1]") {
  std::mt19937_64 rng(23);
  MockSimilarity sim;
  MockEntailment nli;
  for (int t = 0; t < 200; ++t) {
    auto ref = random_sentences(rng, 1 + rng() % 5);
    auto cand = random_sentences(rng, 1 + rng() % 8);
    auto r = semantic_reward_detail(ref, cand, sim, nli);
    CHECK(r.reward >= 0.0);
    CHECK(r.reward <= 1.0);
    if (r.alignment.gated) {
      CHECK(r.reward == 0.0);
      continue;
    }
    double sum = 0;
    for (const auto& o : r.outcomes) sum += o.p;
    CHECK(r.reward == doctest::Approx(sum / static_cast<double>(ref.size())).epsilon(1e-12));
  }
}

TEST_CASE("identical texts score 1 with a reflexive predictor") {
  MockSimilarity sim;
  MockEntailment nli;
  std::vector<std::string> s = {"the cat sat", "it was warm"};
  CHECK(semantic_reward_detail(s, s, sim, nli).reward == 1.0);
}

TEST_CASE("nli failures score the pair zero and are reported") {
  SpySimilarity sim;
  testsupport::FailingEntailment nli;
  std::vector<std::string> s = {"a", "b"};
  auto r = semantic_reward_detail(s, s, sim, nli);
  CHECK(r.nli_failed);
  CHECK(r.reward == 0.0);
  CHECK(r.outcomes[0].failed);
  CHECK(r.diagnostics().is_object());
}

TEST_CASE("text overload splits with the analyzer") {
  auto m = testsupport::morph();
  MockSimilarity sim;
  MockEntailment nli;
  double r = semantic_reward("The dog runs. The cat sleeps.", "The dog runs. The cat sleeps.",
                             Language::en, *m, sim, nli);
  CHECK(r == 1.0);
  double gated = semantic_reward("The dog runs. The cat sleeps.", "The dog runs.", Language::en, *m,
                                 sim, nli);
  CHECK(gated == 0.0);
}
