#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leveltext/text_analysis.hpp"

namespace leveltext {

// score = matched / total over the content-lemma multiset. UNKNOWN lemmas
// count in total, never in matched. A text without content lemmas scores
// 1.0 and is flagged degenerate.
struct CoverageResult {
  double score = 1.0;
  std::size_t matched = 0;
  std::size_t total = 0;
  std::size_t unknown = 0;
  bool degenerate = true;
};

CoverageResult coverage_score(std::span<const ContentLemma> lemmas, int target);
CoverageResult coverage_score(const AnalyzedText& a, int target);

struct VocabReward {
  double reward = 0.0;
  CoverageResult rollout;
  CoverageResult original;
};

// rollout coverage minus original coverage, in [-1, 1]. The difference is
// taken on the exact fractions before rounding to double.
VocabReward vocab_reward_detail(const AnalyzedText& rollout, const AnalyzedText& original,
                                int target);
double vocab_reward(const AnalyzedText& rollout, const AnalyzedText& original, int target);

// Share of content lemmas at each ordinal of a scale with `levels` labels,
// plus a final UNKNOWN share. Sums to 1 unless the text has no content
// lemmas, in which case all shares are 0.
std::vector<double> level_shares(const AnalyzedText& a, std::size_t levels);

}  // namespace leveltext
