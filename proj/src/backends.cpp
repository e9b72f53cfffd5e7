#include "leveltext/backends.hpp"

#include <array>
#include <map>
#include <mutex>

namespace leveltext {

namespace {

constexpr std::array<std::string_view, 18> kPosNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PROPN", "ADP", "AUX", "PART", "SCONJ",
    "CCONJ", "DET", "PRON", "NUM", "SYM", "PUNCT", "SPACE", "X", "INTJ"};

class SerialMorph final : public MorphAnalyzer {
 public:
  explicit SerialMorph(std::shared_ptr<const MorphAnalyzer> inner) : inner_(std::move(inner)) {}
  MorphAnalysis analyze(std::string_view text, Language lang) const override {
    std::lock_guard lock(mu_);
    return inner_->analyze(text, lang);
  }
  std::string id() const override { return inner_->id(); }

 private:
  std::shared_ptr<const MorphAnalyzer> inner_;
  mutable std::mutex mu_;
};

class SerialTokenizer final : public SubwordTokenizer {
 public:
  explicit SerialTokenizer(std::shared_ptr<const SubwordTokenizer> inner)
      : inner_(std::move(inner)) {}
  std::size_t count(std::string_view text) const override {
    std::lock_guard lock(mu_);
    return inner_->count(text);
  }
  std::vector<TokenId> encode(std::string_view text) const override {
    std::lock_guard lock(mu_);
    return inner_->encode(text);
  }
  std::string detokenize(std::span<const TokenId> ids) const override {
    std::lock_guard lock(mu_);
    return inner_->detokenize(ids);
  }
  std::string id() const override { return inner_->id(); }

 private:
  std::shared_ptr<const SubwordTokenizer> inner_;
  mutable std::mutex mu_;
};

class SerialSimilarity final : public SimilarityScorer {
 public:
  explicit SerialSimilarity(std::shared_ptr<const SimilarityScorer> inner)
      : inner_(std::move(inner)) {}
  double score(std::string_view reference, std::string_view candidate) const override {
    std::lock_guard lock(mu_);
    return inner_->score(reference, candidate);
  }
  std::string id() const override { return inner_->id(); }

 private:
  std::shared_ptr<const SimilarityScorer> inner_;
  mutable std::mutex mu_;
};

class SerialEntailment final : public EntailmentPredictor {
 public:
  explicit SerialEntailment(std::shared_ptr<const EntailmentPredictor> inner)
      : inner_(std::move(inner)) {}
  bool entails(std::string_view premise, std::string_view hypothesis) const override {
    std::lock_guard lock(mu_);
    return inner_->entails(premise, hypothesis);
  }
  std::string id() const override { return inner_->id(); }

 private:
  std::shared_ptr<const EntailmentPredictor> inner_;
  mutable std::mutex mu_;
};

class SerialChat final : public ChatModelClient {
 public:
  explicit SerialChat(std::shared_ptr<const ChatModelClient> inner) : inner_(std::move(inner)) {}
  std::string complete(std::string_view prompt, double temperature,
                       std::uint64_t seed) const override {
    std::lock_guard lock(mu_);
    return inner_->complete(prompt, temperature, seed);
  }
  std::string id() const override { return inner_->id(); }

 private:
  std::shared_ptr<const ChatModelClient> inner_;
  mutable std::mutex mu_;
};

template <class Wrapper, class T>
std::shared_ptr<const T> wrap_if_serial(std::shared_ptr<const T> b) {
  if (!b || b->concurrent()) return b;
  return std::make_shared<Wrapper>(std::move(b));
}

}  // namespace

std::string_view to_string(Pos pos) { return kPosNames[static_cast<std::size_t>(pos)]; }

Pos parse_pos(std::string_view tag) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == tag) return static_cast<Pos>(i);
  }
  throw Error("unknown part-of-speech tag \"" + std::string(tag) + "\"");
}

std::shared_ptr<const MorphAnalyzer> serialized(std::shared_ptr<const MorphAnalyzer> b) {
  return wrap_if_serial<SerialMorph>(std::move(b));
}
std::shared_ptr<const SubwordTokenizer> serialized(std::shared_ptr<const SubwordTokenizer> b) {
  return wrap_if_serial<SerialTokenizer>(std::move(b));
}
std::shared_ptr<const SimilarityScorer> serialized(std::shared_ptr<const SimilarityScorer> b) {
  return wrap_if_serial<SerialSimilarity>(std::move(b));
}
std::shared_ptr<const EntailmentPredictor> serialized(
    std::shared_ptr<const EntailmentPredictor> b) {
  return wrap_if_serial<SerialEntailment>(std::move(b));
}
std::shared_ptr<const ChatModelClient> serialized(std::shared_ptr<const ChatModelClient> b) {
  return wrap_if_serial<SerialChat>(std::move(b));
}

BackendSuite serialize_where_needed(BackendSuite suite) {
  suite.morph = serialized(std::move(suite.morph));
  suite.tokenizer = serialized(std::move(suite.tokenizer));
  suite.similarity = serialized(std::move(suite.similarity));
  suite.entailment = serialized(std::move(suite.entailment));
  // Policy and judge roles may share one instance; they must share its queue.
  std::map<const ChatModelClient*, std::shared_ptr<const ChatModelClient>> wrapped;
  auto wrap_chat = [&](std::shared_ptr<const ChatModelClient>& b) {
    if (!b) return;
    auto [it, inserted] = wrapped.emplace(b.get(), nullptr);
    if (inserted) it->second = serialized(b);
    b = it->second;
  };
  wrap_chat(suite.policy);
  for (auto& j : suite.judges) wrap_chat(j);
  return suite;
}

}  // namespace leveltext
