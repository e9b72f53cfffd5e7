#include "leveltext/constrained_decoding.hpp"

#include <algorithm>
#include <cmath>

#include "leveltext/errors.hpp"
#include "leveltext/parallel.hpp"
#include "leveltext/text_analysis.hpp"
#include "leveltext/vocab_coverage.hpp"

namespace leveltext {

FudgeScorer::FudgeScorer(const LanguageResources& resources, int target,
                         const SubwordTokenizer& tokenizer, const MorphAnalyzer& morph,
                         FudgeOptions options)
    : res_(resources), target_(target), tok_(tokenizer), morph_(morph), opt_(options) {
  if (target < 0 || static_cast<std::size_t>(target) >= res_.lexicon.scale().size()) {
    throw PreconditionError("target ordinal out of range");
  }
}

StepScore FudgeScorer::score_one(std::span<const TokenId> suffix, TokenId candidate) const {
  std::vector<TokenId> window(suffix.begin(), suffix.end());
  window.push_back(candidate);
  StepScore s;
  s.token_id = candidate;
  s.window_text = tok_.detokenize(window);
  auto cov = coverage_score(analyze(s.window_text, res_, morph_), target_);
  s.coverage = cov.score;
  s.degenerate = cov.degenerate;
  return s;
}

std::vector<StepScore> FudgeScorer::score(std::span<const TokenId> context,
                                          std::span<const TokenId> candidates) const {
  if (candidates.empty()) throw PreconditionError("no candidate tokens to score");
  if (candidates.size() > opt_.max_candidates) {
    throw PreconditionError("at most " + std::to_string(opt_.max_candidates) +
                            " candidates per step");
  }
  auto keep = std::min(context.size(), opt_.context_tokens);
  auto suffix = context.subspan(context.size() - keep);
  std::vector<StepScore> out(candidates.size());
  parallel_for(candidates.size(), opt_.jobs,
               [&](std::size_t i) { out[i] = score_one(suffix, candidates[i]); });
  return out;
}

std::vector<StepScore> score_candidates(std::span<const TokenId> context,
                                        std::span<const TokenId> candidates,
                                        const LanguageResources& resources, int target,
                                        const SubwordTokenizer& tokenizer,
                                        const MorphAnalyzer& morph) {
  return FudgeScorer(resources, target, tokenizer, morph).score(context, candidates);
}

std::vector<double> fuse_logits(std::span<const double> logits, std::span<const StepScore> scores,
                                const FusionParams& params) {
  if (logits.size() != scores.size()) throw PreconditionError("logits and scores differ in length");
  if (!(params.floor > 0.0)) throw PreconditionError("fusion floor must be positive");
  std::vector<double> out(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = logits[i] + params.weight * std::log(std::max(scores[i].coverage, params.floor));
  }
  return out;
}

LogitProcessor make_logit_processor(const FudgeScorer& scorer, FusionParams params) {
  return [&scorer, params](std::span<const TokenId> context, std::span<const TokenId> candidates,
                           std::span<const double> logits) {
    auto scores = scorer.score(context, candidates);
    return fuse_logits(logits, scores, params);
  };
}

}  // namespace leveltext
