#pragma once

#include <atomic>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "leveltext/backends.hpp"
#include "leveltext/errors.hpp"
#include "leveltext/mock_backends.hpp"
#include "leveltext/resources.hpp"

namespace testsupport {

using namespace leveltext;

inline std::filesystem::path data_dir() { return LEVELTEXT_TEST_DATA_DIR; }
inline std::filesystem::path golden_dir() { return LEVELTEXT_TEST_GOLDEN_DIR; }
inline std::filesystem::path prompt_dir() { return LEVELTEXT_TEST_PROMPT_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loaded once; every test shares it read-only.
inline std::shared_ptr<const ResourceBundle> bundle() {
  static auto b = std::make_shared<const ResourceBundle>(ResourceBundle::load(data_dir()));
  return b;
}

inline std::shared_ptr<const MorphAnalyzer> morph() {
  static auto m = std::make_shared<const MockMorphAnalyzer>(bundle());
  return m;
}

inline const BackendSuite& mock_suite() {
  static BackendSuite s = make_mock_suite(bundle());
  return s;
}

// Counts calls; scores with a plain token-F1 (no canonicalization).
class SpySimilarity final : public SimilarityScorer {
 public:
  double score(std::string_view r, std::string_view c) const override {
    ++calls;
    return inner_.score(r, c);
  }
  std::string id() const override { return "spy-similarity"; }
  mutable std::atomic<std::size_t> calls{0};

 private:
  MockSimilarity inner_;
};

// Similarity from a lookup table keyed by (reference, candidate).
class TableSimilarity final : public SimilarityScorer {
 public:
  std::map<std::pair<std::string, std::string>, double> table;
  double fallback = 0.0;
  double score(std::string_view r, std::string_view c) const override {
    auto it = table.find({std::string(r), std::string(c)});
    return it == table.end() ? fallback : it->second;
  }
  std::string id() const override { return "table-similarity"; }
};

class ConstEntailment final : public EntailmentPredictor {
 public:
  explicit ConstEntailment(bool v) : v_(v) {}
  bool entails(std::string_view, std::string_view) const override { return v_; }
  std::string id() const override { return "const-entailment"; }

 private:
  bool v_;
};

class FailingEntailment final : public EntailmentPredictor {
 public:
  bool entails(std::string_view, std::string_view) const override {
    throw RetryableError("nli down");
  }
  std::string id() const override { return "failing-entailment"; }
};

// Replays canned replies in order, then repeats the last one.
class ScriptedChat final : public ChatModelClient {
 public:
  explicit ScriptedChat(std::vector<std::string> replies, std::string name = "scripted")
      : replies_(std::move(replies)), name_(std::move(name)) {}
  std::string complete(std::string_view prompt, double, std::uint64_t) const override {
    std::lock_guard lk(mu_);
    prompts.emplace_back(prompt);
    std::size_t i = std::min(next_++, replies_.size() - 1);
    if (replies_[i] == "<throw>") throw Error("scripted failure");
    return replies_[i];
  }
  std::string id() const override { return name_; }
  mutable std::vector<std::string> prompts;

 private:
  std::vector<std::string> replies_;
  std::string name_;
  mutable std::size_t next_ = 0;
  mutable std::mutex mu_;
};

inline BackendSuite suite_with(std::shared_ptr<const ChatModelClient> judge) {
  BackendSuite s = mock_suite();
  s.policy = judge;
  s.judges = {judge};
  return s;
}

}  // namespace testsupport
