#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "leveltext/backends.hpp"
#include "leveltext/coherence_judge.hpp"
#include "leveltext/resources.hpp"
#include "leveltext/semantic_preservation.hpp"

namespace leveltext {

struct RewardWeights {
  double vocab = 2.0;
  double sem = 1.0;
  double coh = 1.0;

  void validate() const;
  bool operator==(const RewardWeights&) const = default;
};

inline constexpr const char* kFlagDegenerateEmpty = "degenerate_empty";
inline constexpr const char* kFlagJudgeParseFailed = "judge_parse_failed";
inline constexpr const char* kFlagSemGated = "sem_gated";
inline constexpr const char* kFlagNliPairFailed = "nli_pair_failed";

struct RewardBreakdown {
  double r_vocab = 0.0;
  double r_sem = 0.0;
  double r_coh = 0.0;
  double total = 0.0;
  RewardWeights weights;
  std::vector<std::string> flags;

  bool has_flag(std::string_view f) const;
  bool operator==(const RewardBreakdown&) const = default;
};

// weights.vocab * r_vocab + weights.sem * r_sem + weights.coh * r_coh
double weighted_total(const RewardWeights& w, double r_vocab, double r_sem, double r_coh);

struct GroupStats {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

GroupStats group_stats(std::span<const double> totals);

struct RolloutGroup {
  std::string prompt_id;
  Language language = Language::en;
  int target = 0;
  std::string original;
  std::vector<std::string> rollouts;
};

struct GroupScore {
  std::vector<RewardBreakdown> breakdowns;
  GroupStats stats;
};

struct EngineConfig {
  RewardWeights weights;
  CoherenceParams params;
  std::size_t max_span = kDefaultMaxSpan;
  JudgeOptions judge;
  // Training mode: an unparseable judge answer scores raw = 0 and is flagged
  // instead of failing the rollout.
  bool judge_failure_scores_zero = true;
  std::size_t jobs = 1;
};

struct BestOfN {
  std::size_t best_index = 0;
  std::vector<std::string> candidates;
  std::vector<RewardBreakdown> breakdowns;

  const std::string& best() const { return candidates[best_index]; }
  const RewardBreakdown& best_breakdown() const { return breakdowns[best_index]; }
};

// Stateless between requests; safe to share across threads when the backends are.
class RewardEngine {
 public:
  RewardEngine(std::shared_ptr<const ResourceBundle> resources, BackendSuite suite);

  RewardBreakdown score_rollout(std::string_view original, std::string_view rollout,
                                Language lang, int target, const EngineConfig& config = {}) const;

  // Rollouts score concurrently (config.jobs); output order follows input.
  GroupScore score_group(const RolloutGroup& group, const EngineConfig& config = {}) const;

  // Samples n candidates from the policy (seeds 42, 43, ...) and keeps the
  // highest total; ties go to the earliest candidate.
  BestOfN demo_best_of_n(std::string_view original, Language lang, int target, std::size_t n,
                         const EngineConfig& config = {}, double temperature = 1.0) const;

  const BackendSuite& suite() const { return suite_; }
  const ResourceBundle& resources() const { return *resources_; }

 private:
  struct Prepared;
  RewardBreakdown score_prepared(const Prepared& original, std::string_view rollout,
                                 const EngineConfig& config) const;

  std::shared_ptr<const ResourceBundle> resources_;
  BackendSuite suite_;
};

void to_json(nlohmann::json& j, const RewardWeights& w);
void from_json(const nlohmann::json& j, RewardWeights& w);
void to_json(nlohmann::json& j, const CoherenceParams& p);
void from_json(const nlohmann::json& j, CoherenceParams& p);
void to_json(nlohmann::json& j, const RewardBreakdown& b);

// Request body of the group-scoring endpoint:
// {language, target_level, original, rollouts[], prompt_id?, weights?, params?}
struct ScoreGroupRequest {
  RolloutGroup group;
  EngineConfig config;
};

ScoreGroupRequest parse_score_group_request(const nlohmann::json& j, EngineConfig defaults = {});
nlohmann::json score_group_response(const GroupScore& score);

}  // namespace leveltext
