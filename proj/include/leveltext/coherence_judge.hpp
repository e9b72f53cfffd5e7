#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "leveltext/backends.hpp"
#include "leveltext/text_analysis.hpp"

namespace leveltext {

struct CoherenceParams {
  // Quality boundary: judge scores at or below alpha earn no coherence reward.
  double alpha = 0.6;
  // Weight of the penalty for copying the original's above-level lemmas.
  double beta = 0.05;

  void validate() const;
};

struct JudgeVerdict {
  int raw = 0;
  double normalized = 0.0;  // raw / 100
  std::string judge_id;
  int attempts = 1;
};

struct JudgeOptions {
  int max_reprompts = 2;
  double temperature = 0.0;
  std::uint64_t seed = kDefaultSeed;
};

// Accepts a bare integer 0..100, surrounding whitespace allowed.
std::optional<int> parse_judge_output(std::string_view output);

// Renders the judge prompt, asks the backend and parses the answer,
// re-prompting up to options.max_reprompts times. Throws JudgeParseError with
// the last raw output when no attempt parses.
JudgeVerdict judge(std::string_view original, std::string_view candidate, Language lang,
                   const ChatModelClient& backend, const JudgeOptions& options = {});

// |a ∩ b| / |a ∪ b|, with J(∅, ∅) = 0.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

// max(1 - ((1 - s) / (1 - alpha))^2, 0) - beta * J
double coherence_reward(double normalized_score, double jaccard_similarity,
                        const CoherenceParams& params = {});

// J is taken over the above-target lemma sets of the two texts.
double coherence_reward(const JudgeVerdict& verdict, const AnalyzedText& original,
                        const AnalyzedText& candidate, int target,
                        const CoherenceParams& params = {});

// Evaluation-time coherence on the 0-100 scale: mean of two judges' verdicts.
// Strict: any judge failure propagates.
double eval_coherence(std::string_view original, std::string_view candidate, Language lang,
                      const ChatModelClient& judge_a, const ChatModelClient& judge_b,
                      const JudgeOptions& options = {});

}  // namespace leveltext
