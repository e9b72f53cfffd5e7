#pragma once

// Seed-corpus construction: Wikipedia article chunking, PGV document
// preprocessing, per-level replication and seeded sampling/splitting.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "leveltext/backends.hpp"
#include "leveltext/level_lexicon.hpp"

namespace leveltext {

enum class CorpusSource { wikipedia, pgv };
std::string_view to_string(CorpusSource s);
CorpusSource parse_source(std::string_view s);

inline constexpr std::size_t kMaxChunkTokens = 512;
inline constexpr std::size_t kMinParagraphTokens = 20;
inline constexpr std::size_t kMinDocumentTokens = 300;

namespace chunk_flags {
inline constexpr const char* oversized_paragraph = "oversized_paragraph";
inline constexpr const char* oversized_sentence = "oversized_sentence";
inline constexpr const char* truncated = "truncated";
inline constexpr const char* truncated_mid_paragraph = "truncated_mid_paragraph";
}  // namespace chunk_flags

struct CorpusChunk {
  std::string id;
  Language language = Language::en;
  CorpusSource source = CorpusSource::wikipedia;
  std::string text;
  std::size_t token_count = 0;
  std::optional<std::string> target_level;
  std::size_t paragraph_count = 0;
  std::vector<std::string> flags;

  bool has_flag(std::string_view f) const;
  bool operator==(const CorpusChunk&) const = default;
};

nlohmann::json to_json(const CorpusChunk& c);
CorpusChunk chunk_from_json(const nlohmann::json& j);
void write_chunks_jsonl(std::ostream& out, const std::vector<CorpusChunk>& chunks);
std::vector<CorpusChunk> read_chunks_jsonl(std::istream& in);

struct ChunkOptions {
  std::size_t max_tokens = kMaxChunkTokens;
  std::size_t min_paragraph_tokens = kMinParagraphTokens;
};

// Paragraphs split on "\n\n", trimmed; short ones and blacklisted reference
// headings dropped. This is the text the chunks must reconstruct.
std::vector<std::string> filter_paragraphs(std::string_view article,
                                           const SubwordTokenizer& tokenizer,
                                           const std::vector<std::string>& reference_headings,
                                           const ChunkOptions& options = {});

// Chunk ids are "<article_id>-<n>" with n counting from 0.
std::vector<CorpusChunk> chunk_wikipedia(std::string_view article, std::string_view article_id,
                                         Language language, const SubwordTokenizer& tokenizer,
                                         const std::vector<std::string>& reference_headings,
                                         const ChunkOptions& options = {});

// {"id": "...", "paragraphs": [{"text": "...", "type": "...", ...}]}
// A paragraph is dropped if it has a "crawlinfo" key or a blacklisted type.
struct PgvParagraph {
  std::string text;
  nlohmann::json attrs = nlohmann::json::object();
};
struct PgvDocument {
  std::string id;
  std::vector<PgvParagraph> paragraphs;
};
PgvDocument pgv_document_from_json(const nlohmann::json& j);

struct PgvOptions {
  std::size_t max_tokens = kMaxChunkTokens;
  std::size_t min_tokens = kMinDocumentTokens;
};

std::optional<CorpusChunk> preprocess_pgv(const PgvDocument& doc, Language language,
                                          const SubwordTokenizer& tokenizer,
                                          const PgvOptions& options = {});

std::vector<CorpusChunk> expand_levels(const std::vector<CorpusChunk>& chunks,
                                       const LevelScale& scale);

// Seeded RNG: std::mt19937_64 (fully specified by the standard) driving our
// own bounded draw and Fisher-Yates shuffle, so results do not depend on the
// standard library's distribution implementations.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct SplitSpec {
  // Exactly one of these is used: a per-language test count, or a test fraction.
  std::optional<std::size_t> test_count;
  std::optional<double> test_fraction;
  std::uint64_t seed = kDefaultSeed;
};

struct Split {
  std::vector<CorpusChunk> train;
  std::vector<CorpusChunk> test;
};

// Per-language uniform sampling: each language's chunks (in input order) are
// shuffled with a stream seeded by seed + language index; the first k go to
// test. Both outputs keep input order. A count above the population throws.
Split sample_and_split(const std::vector<CorpusChunk>& chunks, const SplitSpec& spec);

}  // namespace leveltext
