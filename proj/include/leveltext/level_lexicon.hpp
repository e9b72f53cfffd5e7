#pragma once

#include <compare>
#include <climits>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leveltext {

enum class Language { en, ja, ko, zh };

inline constexpr Language kAllLanguages[] = {Language::en, Language::ja, Language::ko,
                                             Language::zh};

std::string_view language_code(Language lang);
// English name used inside prompts ("English", "Japanese", ...).
std::string_view language_name(Language lang);
Language parse_language(std::string_view code);

// A proficiency level: a 0-based ordinal from easiest, or UNKNOWN, which
// orders strictly above every ordinal.
class Level {
 public:
  static constexpr Level unknown() { return Level(kUnknown); }
  static constexpr Level of(int ordinal) { return Level(ordinal); }

  constexpr bool is_unknown() const { return value_ == kUnknown; }
  constexpr int ordinal() const { return value_; }

  constexpr auto operator<=>(const Level&) const = default;

 private:
  static constexpr int kUnknown = INT_MAX;
  constexpr explicit Level(int v) : value_(v) {}
  int value_;
};

std::string to_string(Level level, const class LevelScale& scale);

class LevelScale {
 public:
  static const LevelScale& cefr();
  static const LevelScale& jlpt();
  static const LevelScale& topik();
  static const LevelScale& hsk();
  static const LevelScale& for_language(Language lang);

  Language language() const { return language_; }
  std::string_view name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  // 0-based position from easiest. HSK7/HSK8/HSK9 are aliases of HSK7-9.
  // Throws UnknownLevelError listing the valid labels.
  int ordinal(std::string_view label) const;
  const std::string& label(int ordinal) const;
  // Level as written in prompts, e.g. "CEFR A1", "JLPT N5", "TOPIK Level 1".
  std::string display_name(int ordinal) const;

 private:
  LevelScale(Language lang, std::string name, std::vector<std::string> labels,
             std::vector<std::pair<std::string, std::string>> aliases,
             std::vector<std::string> display);

  Language language_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::string>> aliases_;
  std::vector<std::string> display_;
};

// Trim; English is additionally case-folded with internal whitespace
// collapsed to single spaces. Other languages are kept verbatim.
std::string normalize_lemma(Language lang, std::string_view lemma);

struct LexiconEntry {
  std::string lemma;
  int level = 0;
};

struct Phrase {
  std::string lemma;
  std::vector<std::string> tokens;
};

// Immutable lemma -> level map for one language. Duplicate lemmas collapse to
// the minimum ordinal.
class LevelLexicon {
 public:
  LevelLexicon(const LevelScale& scale, const std::vector<LexiconEntry>& entries);

  const LevelScale& scale() const { return *scale_; }
  Language language() const { return scale_->language(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Exact match on an already-normalized lemma.
  Level lookup(std::string_view lemma) const;
  bool contains(std::string_view lemma) const;

  // English multiword lemmas, by descending token count, then descending
  // byte length, then lexicographic.
  const std::vector<Phrase>& phrase_index() const { return phrases_; }
  std::size_t max_phrase_tokens() const;
  // Indices into phrase_index() of the phrases whose first token is `token`,
  // in phrase_index() order.
  const std::vector<std::size_t>& phrases_starting_with(std::string_view token) const;

  // Entries sorted by lemma, for deterministic comparison and export.
  std::vector<LexiconEntry> sorted_entries() const;

 private:
  const LevelScale* scale_;
  std::unordered_map<std::string, int> entries_;
  std::vector<Phrase> phrases_;
  std::unordered_map<std::string, std::vector<std::size_t>> phrase_by_first_;
};

LevelLexicon parse_lexicon(std::istream& in, const LevelScale& scale,
                           const std::string& source_name = "<stream>");
LevelLexicon load_lexicon(const std::filesystem::path& path, const LevelScale& scale);

// Conventional file name: vocab_<lang>.tsv
std::string lexicon_file_name(Language lang);

}  // namespace leveltext
