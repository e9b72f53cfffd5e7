#include "leveltext/vocab_coverage.hpp"

#include <cstdint>

namespace leveltext {

CoverageResult coverage_score(std::span<const ContentLemma> lemmas, int target) {
  CoverageResult r;
  r.total = lemmas.size();
  for (const auto& cl : lemmas) {
    if (cl.level.is_unknown()) {
      ++r.unknown;
    } else if (cl.level <= Level::of(target)) {
      ++r.matched;
    }
  }
  r.degenerate = r.total == 0;
  r.score = r.degenerate ? 1.0 : static_cast<double>(r.matched) / static_cast<double>(r.total);
  return r;
}

CoverageResult coverage_score(const AnalyzedText& a, int target) {
  return coverage_score(a.content_lemmas, target);
}

VocabReward vocab_reward_detail(const AnalyzedText& rollout, const AnalyzedText& original,
                                int target) {
  VocabReward v;
  v.rollout = coverage_score(rollout, target);
  v.original = coverage_score(original, target);
  auto frac = [](const CoverageResult& c) {
    return c.degenerate ? std::pair<std::int64_t, std::int64_t>{1, 1}
                        : std::pair<std::int64_t, std::int64_t>{
                              static_cast<std::int64_t>(c.matched),
                              static_cast<std::int64_t>(c.total)};
  };
  auto [n1, d1] = frac(v.rollout);
  auto [n2, d2] = frac(v.original);
  v.reward = static_cast<double>(n1 * d2 - n2 * d1) / static_cast<double>(d1 * d2);
  return v;
}

double vocab_reward(const AnalyzedText& rollout, const AnalyzedText& original, int target) {
  return vocab_reward_detail(rollout, original, target).reward;
}

std::vector<double> level_shares(const AnalyzedText& a, std::size_t levels) {
  std::vector<std::size_t> counts(levels + 1, 0);
  for (const auto& cl : a.content_lemmas) {
    if (cl.level.is_unknown()) {
      ++counts[levels];
    } else {
      ++counts[static_cast<std::size_t>(cl.level.ordinal())];
    }
  }
  std::vector<double> shares(levels + 1, 0.0);
  if (a.content_lemmas.empty()) return shares;
  const auto total = static_cast<double>(a.content_lemmas.size());
  for (std::size_t i = 0; i <= levels; ++i) shares[i] = static_cast<double>(counts[i]) / total;
  return shares;
}

}  // namespace leveltext
