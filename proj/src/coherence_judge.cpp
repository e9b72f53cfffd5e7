#include "leveltext/coherence_judge.hpp"

#include <algorithm>
#include <cctype>

#include "leveltext/errors.hpp"
#include "leveltext/prompts.hpp"
#include "leveltext/utf8.hpp"

namespace leveltext {

void CoherenceParams::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw PreconditionError("alpha must be in [0, 1)");
  if (!(beta >= 0.0)) throw PreconditionError("beta must be >= 0");
}

std::optional<int> parse_judge_output(std::string_view output) {
  std::string t = utf8::trim(output);
  if (t.empty() || t.size() > 3) return std::nullopt;
  if (!std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  int v = std::stoi(t);
  if (v > 100) return std::nullopt;
  return v;
}

JudgeVerdict judge(std::string_view original, std::string_view candidate, Language lang,
                   const ChatModelClient& backend, const JudgeOptions& options) {
  const std::string prompt = render_judge_prompt(lang, original, candidate);
  std::string last;
  for (int attempt = 1; attempt <= options.max_reprompts + 1; ++attempt) {
    last = backend.complete(prompt, options.temperature, options.seed);
    if (auto v = parse_judge_output(last)) {
      return JudgeVerdict{*v, *v / 100.0, backend.id(), attempt};
    }
  }
  throw JudgeParseError(last);
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double coherence_reward(double normalized_score, double jaccard_similarity,
                        const CoherenceParams& params) {
  params.validate();
  const double x = (1.0 - normalized_score) / (1.0 - params.alpha);
  return std::max(1.0 - x * x, 0.0) - params.beta * jaccard_similarity;
}

double coherence_reward(const JudgeVerdict& verdict, const AnalyzedText& original,
                        const AnalyzedText& candidate, int target, const CoherenceParams& params) {
  const double j = jaccard(above_level_lemmas(original, target), above_level_lemmas(candidate, target));
  return coherence_reward(verdict.normalized, j, params);
}

double eval_coherence(std::string_view original, std::string_view candidate, Language lang,
                      const ChatModelClient& judge_a, const ChatModelClient& judge_b,
                      const JudgeOptions& options) {
  auto a = judge(original, candidate, lang, judge_a, options);
  auto b = judge(original, candidate, lang, judge_b, options);
  return (a.raw + b.raw) / 2.0;
}

}  // namespace leveltext
