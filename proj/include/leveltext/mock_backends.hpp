#pragma once

// Deterministic offline backends. Every mock is a pure function of its
// inputs and construction data, so results are bit-identical across runs.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "leveltext/backends.hpp"
#include "leveltext/resources.hpp"

namespace leveltext {

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t splitmix64(std::uint64_t x);

// Maps synonym alternatives back to the head word of their row, so mocks can
// treat a lexical substitution as meaning-preserving.
class Canonicalizer {
 public:
  Canonicalizer() = default;
  explicit Canonicalizer(const ResourceBundle& bundle);
  void add(std::string_view variant, std::string_view canonical);
  // Longest-match replacement over the ASCII-lowercased text. Latin keys need
  // word boundaries on both sides, Hangul keys on the left only.
  std::string apply(std::string_view text) const;
  bool empty() const { return map_.empty(); }

 private:
  std::unordered_map<std::string, std::string> map_;
  std::size_t max_len_ = 0;
};

// Lowercased whitespace pieces with edge punctuation stripped; Han and kana
// code points become separate pieces. Punctuation-only pieces are dropped.
std::vector<std::string> mock_pieces(std::string_view text);

// Dictionary-driven analyzer: whitespace tokenization for en/ko (with Korean
// particle splitting), longest-match segmentation for ja/zh, closed-class
// tag tables, suffix lemmatization for English, and the capitalization rule
// for English proper nouns.
class MockMorphAnalyzer final : public MorphAnalyzer {
 public:
  explicit MockMorphAnalyzer(std::shared_ptr<const ResourceBundle> bundle);
  MorphAnalysis analyze(std::string_view text, Language lang) const override;
  std::string id() const override { return "mock-morph"; }

 private:
  struct LangData;
  std::shared_ptr<const ResourceBundle> bundle_;
  std::map<Language, std::shared_ptr<const LangData>> data_;
};

// count() is the whitespace piece count (Han/kana code points count one
// each). encode() maps known pieces to vocabulary ids with a leading-space
// bit and falls back to byte ids, so detokenize(encode(x)) is x with
// whitespace collapsed.
class MockTokenizer final : public SubwordTokenizer {
 public:
  static constexpr TokenId kByteBase = 0;
  static constexpr TokenId kVocabBase = 256;

  explicit MockTokenizer(std::vector<std::string> vocabulary);
  explicit MockTokenizer(const ResourceBundle& bundle);

  std::size_t count(std::string_view text) const override;
  std::vector<TokenId> encode(std::string_view text) const override;
  std::string detokenize(std::span<const TokenId> ids) const override;
  std::string id() const override { return "mock-tokenizer"; }
  std::size_t vocabulary_size() const { return vocab_.size(); }
  TokenId id_of(std::string_view piece, bool leading_space) const;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Token-level F1 over mock_pieces of the (canonicalized) texts.
class MockSimilarity final : public SimilarityScorer {
 public:
  MockSimilarity() = default;
  explicit MockSimilarity(std::shared_ptr<const Canonicalizer> canon) : canon_(std::move(canon)) {}
  double score(std::string_view reference, std::string_view candidate) const override;
  std::string id() const override { return "mock-similarity"; }

 private:
  std::shared_ptr<const Canonicalizer> canon_;
};

// premise entails hypothesis iff the hypothesis piece multiset is contained
// in the premise piece multiset (after canonicalization).
class MockEntailment final : public EntailmentPredictor {
 public:
  MockEntailment() = default;
  explicit MockEntailment(std::shared_ptr<const Canonicalizer> canon) : canon_(std::move(canon)) {}
  bool entails(std::string_view premise, std::string_view hypothesis) const override;
  std::string id() const override { return "mock-entailment"; }

 private:
  std::shared_ptr<const Canonicalizer> canon_;
};

struct MockChatOptions {
  std::string name = "mock-chat";
  int judge_min = 0;
  int judge_max = 100;
};

// Serves both roles by recognizing the prompt. Judge prompts get
// judge_min + H % (judge_max - judge_min + 1), H = FNV-1a of name and prompt.
// Simplification prompts get synonym substitution: every word above the
// target level with a listed alternative is replaced by its easiest
// alternative, when that one is strictly easier. At temperature t > 0 each
// eligible occurrence is replaced with probability 1/(1+t), drawn from a
// hash of (seed, occurrence index).
class MockChatModel final : public ChatModelClient {
 public:
  MockChatModel(std::shared_ptr<const ResourceBundle> bundle,
                std::shared_ptr<const MorphAnalyzer> morph, MockChatOptions options = {});
  std::string complete(std::string_view prompt, double temperature,
                       std::uint64_t seed) const override;
  std::string id() const override { return options_.name; }

  std::string simplify(Language lang, int target, std::string_view text, double temperature,
                       std::uint64_t seed, int* substitutions = nullptr) const;
  int judge_score(std::string_view prompt) const;

 private:
  Level level_of(Language lang, std::string_view word) const;

  std::shared_ptr<const ResourceBundle> bundle_;
  std::shared_ptr<const MorphAnalyzer> morph_;
  MockChatOptions options_;
};

struct MockSuiteOptions {
  std::string judge_a = "mock-judge-a";
  std::string judge_b = "mock-judge-b";
  int judge_min = 0;
  int judge_max = 100;
};

// Full offline suite: policy shares the first judge's instance.
BackendSuite make_mock_suite(std::shared_ptr<const ResourceBundle> bundle,
                             const MockSuiteOptions& options = {});

}  // namespace leveltext
