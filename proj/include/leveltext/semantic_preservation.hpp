#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leveltext/backends.hpp"
#include "json.hpp"

namespace leveltext {

inline constexpr std::size_t kDefaultMaxSpan = 4;

// One reference sentence matched to candidate sentences [cand_start, cand_end).
struct AlignmentPair {
  std::size_t ref_index = 0;
  std::size_t cand_start = 0;
  std::size_t cand_end = 0;
  std::string joined_candidate;
  // 1.0 on identity alignments, where no similarity is computed.
  double similarity = 1.0;

  bool operator==(const AlignmentPair&) const = default;
};

struct Alignment {
  // Fewer candidate than reference sentences: no pairs, no reward.
  bool gated = false;
  std::vector<AlignmentPair> pairs;
  // Candidate sentences left after the last reference span.
  std::vector<std::size_t> unconsumed;
  std::size_t similarity_calls = 0;
};

// Greedy in-order alignment. Each reference sentence, left to right, takes
// the k in 1..kmax consecutive candidate sentences at the cursor that
// maximize similarity (ties -> smallest k), where kmax = min(max_span,
// sentences that can be spared while leaving one for every later reference).
// Equal sentence counts align one-to-one without similarity calls.
Alignment align_greedy(std::span<const std::string> ref, std::span<const std::string> cand,
                       const SimilarityScorer& sim, std::size_t max_span = kDefaultMaxSpan);

struct EntailmentOutcome {
  bool forward = false;   // reference => candidate span
  bool backward = false;  // candidate span => reference
  double p = 0.0;         // 1.0 both, 0.5 exactly one, 0.0 neither
  bool failed = false;    // backend error; scored 0.0
};

double pair_score(bool forward, bool backward);

EntailmentOutcome pair_entailment(std::string_view ref_sentence, const AlignmentPair& pair,
                                  const EntailmentPredictor& nli);

struct SemanticResult {
  double reward = 0.0;
  Alignment alignment;
  std::vector<EntailmentOutcome> outcomes;
  bool nli_failed = false;

  nlohmann::json diagnostics() const;
};

SemanticResult semantic_reward_detail(std::span<const std::string> ref_sentences,
                                      std::span<const std::string> cand_sentences,
                                      const SimilarityScorer& sim, const EntailmentPredictor& nli,
                                      std::size_t max_span = kDefaultMaxSpan);

// Splits both texts with the analyzer, then aligns and scores.
SemanticResult semantic_reward_detail(std::string_view ref_text, std::string_view cand_text,
                                      Language lang, const MorphAnalyzer& morph,
                                      const SimilarityScorer& sim, const EntailmentPredictor& nli,
                                      std::size_t max_span = kDefaultMaxSpan);

double semantic_reward(std::string_view ref_text, std::string_view cand_text, Language lang,
                       const MorphAnalyzer& morph, const SimilarityScorer& sim,
                       const EntailmentPredictor& nli, std::size_t max_span = kDefaultMaxSpan);

}  // namespace leveltext
