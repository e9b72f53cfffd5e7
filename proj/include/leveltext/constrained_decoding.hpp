#pragma once

// Rule-based FUDGE-style scorer: each step, every candidate token is scored by
// the vocabulary coverage of (last 5 context tokens + candidate), and the
// host decoder adds weight * log(score) to the candidate's logit.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "leveltext/backends.hpp"
#include "leveltext/resources.hpp"

namespace leveltext {

inline constexpr std::size_t kFudgeContextTokens = 5;
inline constexpr std::size_t kFudgeMaxCandidates = 100;

struct StepScore {
  TokenId token_id = 0;
  std::string window_text;
  double coverage = 1.0;
  bool degenerate = false;
};

struct FudgeOptions {
  std::size_t context_tokens = kFudgeContextTokens;
  std::size_t max_candidates = kFudgeMaxCandidates;
  unsigned jobs = 1;
};

class FudgeScorer {
 public:
  FudgeScorer(const LanguageResources& resources, int target, const SubwordTokenizer& tokenizer,
              const MorphAnalyzer& morph, FudgeOptions options = {});

  // One score per candidate, in input order. Throws on an empty or
  // over-long candidate list.
  std::vector<StepScore> score(std::span<const TokenId> context,
                               std::span<const TokenId> candidates) const;

 private:
  StepScore score_one(std::span<const TokenId> suffix, TokenId candidate) const;

  const LanguageResources& res_;
  int target_;
  const SubwordTokenizer& tok_;
  const MorphAnalyzer& morph_;
  FudgeOptions opt_;
};

std::vector<StepScore> score_candidates(std::span<const TokenId> context,
                                        std::span<const TokenId> candidates,
                                        const LanguageResources& resources, int target,
                                        const SubwordTokenizer& tokenizer,
                                        const MorphAnalyzer& morph);

struct FusionParams {
  double weight = 1.0;
  // Coverage is clamped here before the log so a fully unknown window is
  // heavily penalized rather than banned outright.
  double floor = 1e-6;
};

// logits[i] + weight * log(max(coverage[i], floor)).
std::vector<double> fuse_logits(std::span<const double> logits, std::span<const StepScore> scores,
                                const FusionParams& params = {});

// Host integration contract: called once per decoding step with the tokens
// generated so far, the top-k candidate ids and their logits; returns the
// adjusted logits in the same order.
using LogitProcessor = std::function<std::vector<double>(
    std::span<const TokenId> context, std::span<const TokenId> candidates,
    std::span<const double> logits)>;

LogitProcessor make_logit_processor(const FudgeScorer& scorer, FusionParams params = {});

}  // namespace leveltext
