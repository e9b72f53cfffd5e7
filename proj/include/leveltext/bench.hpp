#pragma once

// Benchmark harness: generate simplifications, score them on the three
// evaluation metrics, aggregate Total/Easy and write CSV/SVG reports.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "leveltext/backends.hpp"
#include "leveltext/coherence_judge.hpp"
#include "leveltext/corpus_pipeline.hpp"
#include "leveltext/resources.hpp"

namespace leveltext {

inline constexpr const char* kReferenceSystem = "reference";

namespace record_flags {
inline constexpr const char* generation_failed = "generation_failed";
inline constexpr const char* coverage_degenerate = "coverage_degenerate";
inline constexpr const char* semantic_failed = "semantic_failed";
inline constexpr const char* nli_pair_failed = "nli_pair_failed";
inline constexpr const char* coherence_failed = "coherence_failed";
}  // namespace record_flags

struct Generation {
  std::string chunk_id;
  Language language = Language::en;
  std::string target_level;
  std::string system;
  std::string original;
  std::string candidate;
  bool failed = false;
  std::string error;

  bool operator==(const Generation&) const = default;
};

nlohmann::json to_json(const Generation& g);
Generation generation_from_json(const nlohmann::json& j);
void write_generations_jsonl(std::ostream& out, const std::vector<Generation>& gens);
std::vector<Generation> read_generations_jsonl(std::istream& in);

struct SimplifyOptions {
  double temperature = 0.0;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

// One generation per chunk, in chunk order. `policy` may be null only for the
// reference system, which passes the original through. Chunks need a target
// level. A backend error (remote clients retry internally) or an empty reply
// yields a failed generation rather than an exception.
std::vector<Generation> run_simplification(const std::vector<CorpusChunk>& chunks,
                                           const std::string& system,
                                           const ChatModelClient* policy,
                                           const ResourceBundle& resources,
                                           const SimplifyOptions& options = {});

struct EvalRecord {
  std::string chunk_id;
  Language language = Language::en;
  std::string target_level;
  std::string system;
  std::optional<double> coverage;   // [0, 1]
  std::optional<double> semantic;   // [0, 1]; absent for the reference system
  std::optional<double> coherence;  // [0, 100]; absent for the reference system
  // Share of candidate content lemmas per lexicon level, last entry UNKNOWN.
  std::vector<double> level_shares;
  std::vector<std::string> flags;
  std::string diagnostics;

  bool has_flag(std::string_view f) const;
  bool operator==(const EvalRecord&) const = default;
};

nlohmann::json to_json(const EvalRecord& r);
EvalRecord eval_record_from_json(const nlohmann::json& j);
void write_records_jsonl(std::ostream& out, const std::vector<EvalRecord>& records);
std::vector<EvalRecord> read_records_jsonl(std::istream& in);

struct EvalOptions {
  bool strict = true;  // any metric failure throws, naming the record
  unsigned jobs = 1;
  JudgeOptions judge;
  std::size_t max_span = 4;
};

// Needs at least one judge; with exactly one it is used for both verdicts.
std::vector<EvalRecord> evaluate(const std::vector<Generation>& generations,
                                 const ResourceBundle& resources, const BackendSuite& suite,
                                 const EvalOptions& options = {});

struct AggregateRow {
  Language language = Language::en;
  std::string system;
  std::string metric;  // coverage | semantic | coherence
  double total_mean = 0.0;
  double total_std = 0.0;
  std::size_t total_n = 0;
  std::optional<double> easy_mean;
  std::optional<double> easy_std;
  std::size_t easy_n = 0;
  std::size_t failed = 0;  // records excluded because the metric is missing

  bool operator==(const AggregateRow&) const = default;
};

inline const std::vector<std::string> kMetrics = {"coverage", "semantic", "coherence"};

// Rows sorted by (language, system, metric order). Easy covers the two lowest
// ordinals of the language's scale. Population std.
std::vector<AggregateRow> aggregate(const std::vector<EvalRecord>& records);

// CSV with a header row; numbers written with %.17g so they parse back exactly.
std::string aggregate_csv(const std::vector<AggregateRow>& rows);
std::vector<AggregateRow> parse_aggregate_csv(std::string_view csv);

// Mean level shares per (system, target level) for one language, over
// records with content lemmas. Each bar sums to 1.
struct ShareBar {
  std::string system;
  std::string target_level;
  std::vector<double> shares;  // lexicon levels then UNKNOWN
  std::size_t records = 0;
};
std::vector<ShareBar> level_share_bars(const std::vector<EvalRecord>& records, Language lang);
std::string render_share_svg(const std::vector<ShareBar>& bars, const LevelScale& scale,
                             Language lang);

// Writes aggregate_<metric>.csv for each metric and, when records are given,
// coverage_levels_<lang>.svg per language. Returns the written paths.
std::vector<std::filesystem::path> report(const std::vector<AggregateRow>& rows,
                                          const std::vector<EvalRecord>& records,
                                          const std::filesystem::path& out_dir,
                                          bool plots = true);

}  // namespace leveltext
