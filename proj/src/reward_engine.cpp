#include "leveltext/reward_engine.hpp"

#include <algorithm>
#include <cmath>

#include "leveltext/errors.hpp"
#include "leveltext/parallel.hpp"
#include "leveltext/prompts.hpp"
#include "leveltext/text_analysis.hpp"
#include "leveltext/vocab_coverage.hpp"

namespace leveltext {

void RewardWeights::validate() const {
  if (!(vocab >= 0.0 && sem >= 0.0 && coh >= 0.0)) {
    throw PreconditionError("reward weights must be non-negative");
  }
  if (vocab == 0.0 && sem == 0.0 && coh == 0.0) {
    throw PreconditionError("at least one reward weight must be positive");
  }
}

bool RewardBreakdown::has_flag(std::string_view f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

double weighted_total(const RewardWeights& w, double r_vocab, double r_sem, double r_coh) {
  return w.vocab * r_vocab + w.sem * r_sem + w.coh * r_coh;
}

GroupStats group_stats(std::span<const double> totals) {
  GroupStats s;
  if (totals.empty()) return s;
  double sum = 0.0;
  for (double t : totals) sum += t;
  s.mean = sum / static_cast<double>(totals.size());
  double sq = 0.0;
  for (double t : totals) sq += (t - s.mean) * (t - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(totals.size()));
  return s;
}

struct RewardEngine::Prepared {
  Language lang;
  int target;
  std::string text;
  AnalyzedText analyzed;
};

RewardEngine::RewardEngine(std::shared_ptr<const ResourceBundle> resources, BackendSuite suite)
    : resources_(std::move(resources)), suite_(serialize_where_needed(std::move(suite))) {
  if (!suite_.morph || !suite_.similarity || !suite_.entailment || suite_.judges.empty()) {
    throw PreconditionError("reward engine needs morph, similarity, entailment and a judge");
  }
}

RewardBreakdown RewardEngine::score_prepared(const Prepared& original, std::string_view rollout,
                                             const EngineConfig& config) const {
  const auto& res = resources_->at(original.lang);
  RewardBreakdown b;
  b.weights = config.weights;

  AnalyzedText cand = analyze(rollout, res, *suite_.morph);
  auto vocab = vocab_reward_detail(cand, original.analyzed, original.target);
  b.r_vocab = vocab.reward;
  if (vocab.rollout.degenerate) b.flags.emplace_back(kFlagDegenerateEmpty);

  auto sem = semantic_reward_detail(original.text, rollout, original.lang, *suite_.morph,
                                    *suite_.similarity, *suite_.entailment, config.max_span);
  b.r_sem = sem.reward;
  if (sem.alignment.gated) b.flags.emplace_back(kFlagSemGated);
  if (sem.nli_failed) b.flags.emplace_back(kFlagNliPairFailed);

  JudgeVerdict verdict;
  try {
    verdict = judge(original.text, rollout, original.lang, *suite_.judges.front(), config.judge);
  } catch (const JudgeParseError&) {
    if (!config.judge_failure_scores_zero) throw;
    verdict = JudgeVerdict{0, 0.0, suite_.judges.front()->id(), config.judge.max_reprompts + 1};
    b.flags.emplace_back(kFlagJudgeParseFailed);
  }
  b.r_coh = coherence_reward(verdict, original.analyzed, cand, original.target, config.params);

  b.total = weighted_total(config.weights, b.r_vocab, b.r_sem, b.r_coh);
  return b;
}

RewardBreakdown RewardEngine::score_rollout(std::string_view original, std::string_view rollout,
                                            Language lang, int target,
                                            const EngineConfig& config) const {
  config.weights.validate();
  config.params.validate();
  const auto& res = resources_->at(lang);
  Prepared p{lang, target, std::string(original), analyze(original, res, *suite_.morph)};
  return score_prepared(p, rollout, config);
}

GroupScore RewardEngine::score_group(const RolloutGroup& group, const EngineConfig& config) const {
  if (group.rollouts.size() < 2) throw PreconditionError("a rollout group needs at least 2 rollouts");
  config.weights.validate();
  config.params.validate();
  LevelScale::for_language(group.language).label(group.target);
  const auto& res = resources_->at(group.language);
  Prepared p{group.language, group.target, group.original,
             analyze(group.original, res, *suite_.morph)};
  GroupScore out;
  out.breakdowns.resize(group.rollouts.size());
  parallel_for(group.rollouts.size(), config.jobs, [&](std::size_t i) {
    out.breakdowns[i] = score_prepared(p, group.rollouts[i], config);
  });
  std::vector<double> totals;
  for (const auto& b : out.breakdowns) totals.push_back(b.total);
  out.stats = group_stats(totals);
  return out;
}

BestOfN RewardEngine::demo_best_of_n(std::string_view original, Language lang, int target,
                                     std::size_t n, const EngineConfig& config,
                                     double temperature) const {
  if (n == 0) throw PreconditionError("best-of-n needs n >= 1");
  if (!suite_.policy) throw PreconditionError("best-of-n needs a policy backend");
  const std::string prompt = render_simplify_prompt(lang, target, original);
  BestOfN out;
  for (std::size_t i = 0; i < n; ++i) {
    out.candidates.push_back(suite_.policy->complete(prompt, temperature, kDefaultSeed + i));
  }
  const auto& res = resources_->at(lang);
  Prepared p{lang, target, std::string(original), analyze(original, res, *suite_.morph)};
  out.breakdowns.resize(n);
  parallel_for(n, config.jobs, [&](std::size_t i) {
    out.breakdowns[i] = score_prepared(p, out.candidates[i], config);
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (out.breakdowns[i].total > out.breakdowns[out.best_index].total) out.best_index = i;
  }
  return out;
}

void to_json(nlohmann::json& j, const RewardWeights& w) {
  j = {{"vocab", w.vocab}, {"sem", w.sem}, {"coh", w.coh}};
}

void from_json(const nlohmann::json& j, RewardWeights& w) {
  w.vocab = j.value("vocab", w.vocab);
  w.sem = j.value("sem", w.sem);
  w.coh = j.value("coh", w.coh);
}

void to_json(nlohmann::json& j, const CoherenceParams& p) {
  j = {{"alpha", p.alpha}, {"beta", p.beta}};
}

void from_json(const nlohmann::json& j, CoherenceParams& p) {
  p.alpha = j.value("alpha", p.alpha);
  p.beta = j.value("beta", p.beta);
}

void to_json(nlohmann::json& j, const RewardBreakdown& b) {
  j = {{"r_vocab", b.r_vocab}, {"r_sem", b.r_sem}, {"r_coh", b.r_coh},
       {"total", b.total},     {"weights", b.weights}, {"flags", b.flags}};
}

ScoreGroupRequest parse_score_group_request(const nlohmann::json& j, EngineConfig defaults) {
  ScoreGroupRequest req;
  req.config = std::move(defaults);
  try {
    req.group.language = parse_language(j.at("language").get<std::string>());
    const auto& scale = LevelScale::for_language(req.group.language);
    req.group.target = scale.ordinal(j.at("target_level").get<std::string>());
    req.group.original = j.at("original").get<std::string>();
    req.group.rollouts = j.at("rollouts").get<std::vector<std::string>>();
    req.group.prompt_id = j.value("prompt_id", std::string());
    if (j.contains("weights")) req.config.weights = j.at("weights").get<RewardWeights>();
    if (j.contains("params")) req.config.params = j.at("params").get<CoherenceParams>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed score_group request: ") + e.what());
  }
  return req;
}

nlohmann::json score_group_response(const GroupScore& score) {
  return {{"breakdowns", score.breakdowns}, {"mean", score.stats.mean}, {"std", score.stats.std}};
}

}  // namespace leveltext
