#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "leveltext/errors.hpp"
#include "leveltext/level_lexicon.hpp"

namespace leveltext {

// Universal coarse part-of-speech tags.
enum class Pos {
  NOUN, VERB, ADJ, ADV, PROPN, ADP, AUX, PART, SCONJ, CCONJ, DET, PRON, NUM, SYM, PUNCT, SPACE,
  X, INTJ
};

std::string_view to_string(Pos pos);
Pos parse_pos(std::string_view tag);

struct MorphToken {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::X;
  bool is_stop = false;

  bool operator==(const MorphToken&) const = default;
};

struct MorphAnalysis {
  std::vector<MorphToken> tokens;
  // One past the last token of each sentence; strictly increasing, last
  // element equals tokens.size(). Empty iff tokens is empty.
  std::vector<std::size_t> sentence_ends;
  std::vector<std::string> sentences;
};

using TokenId = std::int64_t;

class MorphAnalyzer {
 public:
  virtual ~MorphAnalyzer() = default;
  virtual MorphAnalysis analyze(std::string_view text, Language lang) const = 0;
  // False when calls must be serialized through one queue.
  virtual bool concurrent() const { return true; }
  virtual std::string id() const = 0;
};

class SubwordTokenizer {
 public:
  virtual ~SubwordTokenizer() = default;
  virtual std::size_t count(std::string_view text) const = 0;
  virtual std::vector<TokenId> encode(std::string_view text) const = 0;
  virtual std::string detokenize(std::span<const TokenId> ids) const = 0;
  virtual bool concurrent() const { return true; }
  virtual std::string id() const = 0;
};

class SimilarityScorer {
 public:
  virtual ~SimilarityScorer() = default;
  // In [0,1]; need not be symmetric.
  virtual double score(std::string_view reference, std::string_view candidate) const = 0;
  virtual bool concurrent() const { return true; }
  virtual std::string id() const = 0;
};

// True iff the predictor's top class is entailment. Must be reflexive.
class EntailmentPredictor {
 public:
  virtual ~EntailmentPredictor() = default;
  virtual bool entails(std::string_view premise, std::string_view hypothesis) const = 0;
  virtual bool concurrent() const { return true; }
  virtual std::string id() const = 0;
};

class ChatModelClient {
 public:
  virtual ~ChatModelClient() = default;
  virtual std::string complete(std::string_view prompt, double temperature,
                               std::uint64_t seed) const = 0;
  virtual bool concurrent() const { return true; }
  virtual std::string id() const = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

struct BackendSuite {
  std::shared_ptr<const MorphAnalyzer> morph;
  std::shared_ptr<const SubwordTokenizer> tokenizer;
  std::shared_ptr<const SimilarityScorer> similarity;
  std::shared_ptr<const EntailmentPredictor> entailment;
  std::shared_ptr<const ChatModelClient> policy;
  // Coherence judges. Training uses the first; evaluation averages two.
  std::vector<std::shared_ptr<const ChatModelClient>> judges;
};

// Wraps every backend that reports concurrent() == false so that its calls
// are serialized through a per-instance lock.
BackendSuite serialize_where_needed(BackendSuite suite);

std::shared_ptr<const MorphAnalyzer> serialized(std::shared_ptr<const MorphAnalyzer> b);
std::shared_ptr<const SubwordTokenizer> serialized(std::shared_ptr<const SubwordTokenizer> b);
std::shared_ptr<const SimilarityScorer> serialized(std::shared_ptr<const SimilarityScorer> b);
std::shared_ptr<const EntailmentPredictor> serialized(
    std::shared_ptr<const EntailmentPredictor> b);
std::shared_ptr<const ChatModelClient> serialized(std::shared_ptr<const ChatModelClient> b);

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
};

// Calls fn, retrying on RetryableError with exponential backoff. The last
// error propagates.
template <class F>
auto with_retries(const RetryPolicy& policy, F&& fn) -> decltype(fn()) {
  auto backoff = policy.initial_backoff;
  for (int attempt = 1;; ++attempt) {
    try {
      return fn();
    } catch (const RetryableError&) {
      if (attempt >= policy.max_attempts) throw;
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
}

}  // namespace leveltext
