#include "leveltext/semantic_preservation.hpp"

#include <algorithm>

#include "leveltext/errors.hpp"
#include "leveltext/utf8.hpp"

namespace leveltext {

namespace {

std::string join_span(std::span<const std::string> sents, std::size_t start, std::size_t end) {
  std::string out;
  for (std::size_t i = start; i < end; ++i) {
    if (i > start) out += ' ';
    out += sents[i];
  }
  return out;
}

}  // namespace

Alignment align_greedy(std::span<const std::string> ref, std::span<const std::string> cand,
                       const SimilarityScorer& sim, std::size_t max_span) {
  if (ref.empty()) throw PreconditionError("alignment needs at least one reference sentence");
  if (max_span == 0) throw PreconditionError("max_span must be >= 1");
  Alignment out;
  if (cand.size() < ref.size()) {
    out.gated = true;
    return out;
  }
  if (cand.size() == ref.size()) {
    for (std::size_t i = 0; i < ref.size(); ++i) out.pairs.push_back({i, i, i + 1, cand[i], 1.0});
    return out;
  }
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const std::size_t later_refs = ref.size() - i - 1;
    const std::size_t spare = cand.size() - cursor - later_refs;
    const std::size_t kmax = std::min(max_span, spare);
    std::size_t best_k = 1;
    double best = -1.0;
    std::string best_joined;
    for (std::size_t k = 1; k <= kmax; ++k) {
      std::string joined = join_span(cand, cursor, cursor + k);
      double s = sim.score(ref[i], joined);
      ++out.similarity_calls;
      if (s > best) {
        best = s;
        best_k = k;
        best_joined = std::move(joined);
      }
    }
    out.pairs.push_back({i, cursor, cursor + best_k, std::move(best_joined), best});
    cursor += best_k;
  }
  for (std::size_t j = cursor; j < cand.size(); ++j) out.unconsumed.push_back(j);
  return out;
}

double pair_score(bool forward, bool backward) {
  if (forward && backward) return 1.0;
  if (forward != backward) return 0.5;
  return 0.0;
}

EntailmentOutcome pair_entailment(std::string_view ref_sentence, const AlignmentPair& pair,
                                  const EntailmentPredictor& nli) {
  EntailmentOutcome o;
  try {
    o.forward = nli.entails(ref_sentence, pair.joined_candidate);
    o.backward = nli.entails(pair.joined_candidate, ref_sentence);
    o.p = pair_score(o.forward, o.backward);
  } catch (const Error&) {
    o = EntailmentOutcome{};
    o.failed = true;
  }
  return o;
}

SemanticResult semantic_reward_detail(std::span<const std::string> ref_sentences,
                                      std::span<const std::string> cand_sentences,
                                      const SimilarityScorer& sim, const EntailmentPredictor& nli,
                                      std::size_t max_span) {
  SemanticResult r;
  r.alignment = align_greedy(ref_sentences, cand_sentences, sim, max_span);
  if (r.alignment.gated) return r;
  double sum = 0.0;
  for (const auto& pair : r.alignment.pairs) {
    auto o = pair_entailment(ref_sentences[pair.ref_index], pair, nli);
    r.nli_failed = r.nli_failed || o.failed;
    sum += o.p;
    r.outcomes.push_back(o);
  }
  r.reward = sum / static_cast<double>(r.alignment.pairs.size());
  return r;
}

SemanticResult semantic_reward_detail(std::string_view ref_text, std::string_view cand_text,
                                      Language lang, const MorphAnalyzer& morph,
                                      const SimilarityScorer& sim, const EntailmentPredictor& nli,
                                      std::size_t max_span) {
  auto ref = morph.analyze(ref_text, lang).sentences;
  auto cand = morph.analyze(cand_text, lang).sentences;
  return semantic_reward_detail(ref, cand, sim, nli, max_span);
}

double semantic_reward(std::string_view ref_text, std::string_view cand_text, Language lang,
                       const MorphAnalyzer& morph, const SimilarityScorer& sim,
                       const EntailmentPredictor& nli, std::size_t max_span) {
  return semantic_reward_detail(ref_text, cand_text, lang, morph, sim, nli, max_span).reward;
}

nlohmann::json SemanticResult::diagnostics() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < alignment.pairs.size(); ++i) {
    const auto& p = alignment.pairs[i];
    nlohmann::json j = {{"ref_index", p.ref_index},
                        {"cand_span", {p.cand_start, p.cand_end}},
                        {"similarity", p.similarity}};
    if (i < outcomes.size()) {
      j["forward"] = outcomes[i].forward;
      j["backward"] = outcomes[i].backward;
      j["p"] = outcomes[i].p;
      j["failed"] = outcomes[i].failed;
    }
    pairs.push_back(std::move(j));
  }
  return {{"gated", alignment.gated},
          {"reward", reward},
          {"pairs", std::move(pairs)},
          {"unconsumed", alignment.unconsumed},
          {"similarity_calls", alignment.similarity_calls}};
}

}  // namespace leveltext
