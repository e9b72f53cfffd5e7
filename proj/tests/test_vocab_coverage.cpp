#include <algorithm>
#include <random>

#include "doctest.h"
#include "leveltext/text_analysis.hpp"
#include "leveltext/vocab_coverage.hpp"
#include "test_support.hpp"

using namespace leveltext;

namespace {

// Independent counter: walk the lemmas, tally by hand.
std::pair<std::size_t, std::size_t> brute(const std::vector<ContentLemma>& ls, int target) {
  std::size_t ok = 0;
  for (const auto& l : ls) {
    if (!l.level.is_unknown() && l.level.ordinal() <= target) ++ok;
  }
  return {ok, ls.size()};
}

std::vector<ContentLemma> random_lemmas(std::mt19937_64& rng, std::size_t n) {
  std::vector<ContentLemma> out;
  for (std::size_t i = 0; i < n; ++i) {
    int r = static_cast<int>(rng() % 7);
    out.push_back({"w" + std::to_string(i), r == 6 ? Level::unknown() : Level::of(r)});
  }
  return out;
}

AnalyzedText text_of(std::vector<ContentLemma> ls) {
  AnalyzedText a;
  a.content_lemmas = std::move(ls);
  return a;
}

}  // namespace

TEST_CASE("coverage counts unknown in the denominator only") {
  std::vector<ContentLemma> ls = {{"a", Level::of(0)}, {"b", Level::of(2)}, {"c", Level::unknown()},
                                  {"a", Level::of(0)}};
  auto r = coverage_score(ls, 1);
  CHECK(r.matched == 2);
  CHECK(r.total == 4);
  CHECK(r.unknown == 1);
  CHECK(r.score == 0.5);
  CHECK(!r.degenerate);
  CHECK(coverage_score(ls, 5).score == 0.75);
}

TEST_CASE("empty content scores 1 and is degenerate") {
  auto r = coverage_score(std::vector<ContentLemma>{}, 0);
  CHECK(r.score == 1.0);
  CHECK(r.degenerate);
  CHECK(r.total == 0);
}

TEST_CASE("property: coverage equals the brute-force counter") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    auto ls = random_lemmas(rng, 1 + rng() % 40);
    int target = static_cast<int>(rng() % 6);
    auto [ok, n] = brute(ls, target);
    auto r = coverage_score(ls, target);
    CHECK(r.matched == ok);
    CHECK(r.total == n);
    CHECK(r.score == static_cast<double>(ok) / static_cast<double>(n));
  }
}

TEST_CASE("property: coverage is monotone in the target level") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    auto ls = random_lemmas(rng, 1 + rng() % 30);
    double prev = -1.0;
    for (int target = 0; target < 6; ++target) {
      double s = coverage_score(ls, target).score;
      CHECK(s >= prev);
      CHECK(s >= 0.0);
      CHECK(s <= 1.0);
      prev = s;
    }
  }
}

TEST_CASE("property: coverage is invariant under permutation") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto ls = random_lemmas(rng, 1 + rng() % 30);
    int target = static_cast<int>(rng() % 6);
    double s = coverage_score(ls, target).score;
    std::shuffle(ls.begin(), ls.end(), rng);
    CHECK(coverage_score(ls, target).score == s);
  }
}

TEST_CASE("vocab reward is the exact coverage difference") {
  auto roll = text_of({{"a", Level::of(0)}, {"b", Level::of(0)}, {"c", Level::of(3)}});
  auto orig = text_of({{"a", Level::of(0)}, {"c", Level::of(3)}, {"d", Level::unknown()}});
  auto r = vocab_reward_detail(roll, orig, 0);
  // 2/3 - 1/3
  CHECK(r.reward == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(vocab_reward(orig, orig, 0) == 0.0);
  CHECK(vocab_reward(text_of({}), orig, 0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("property: vocab reward stays in [-1, 1] and is antisymmetric") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 300; ++t) {
    auto a = text_of(random_lemmas(rng, rng() % 20));
    auto b = text_of(random_lemmas(rng, rng() % 20));
    int target = static_cast<int>(rng() % 6);
    double ab = vocab_reward(a, b, target);
    double ba = vocab_reward(b, a, target);
    CHECK(ab >= -1.0);
    CHECK(ab <= 1.0);
    CHECK(ab == -ba);
  }
}

TEST_CASE("level shares sum to one with an unknown bucket") {
  auto a = text_of({{"a", Level::of(0)}, {"b", Level::of(1)}, {"c", Level::of(1)}, {"d", Level::unknown()}});
  auto s = level_shares(a, 6);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == 0.25);
  CHECK(s[1] == 0.5);
  CHECK(s[6] == 0.25);
  double sum = 0;
  for (double x : s) sum += x;
  CHECK(sum == doctest::Approx(1.0));
  auto z = level_shares(text_of({}), 6);
  CHECK(std::all_of(z.begin(), z.end(), [](double x) { return x == 0.0; }));
}

TEST_CASE("coverage on real text through the mock analyzer") {
  const auto& res = testsupport::bundle()->at(Language::en);
  auto a = analyze("The dog runs.", res, *testsupport::morph());
  auto r = coverage_score(a, 5);
  CHECK(r.total >= 1);
  CHECK(r.score == 1.0);
}
