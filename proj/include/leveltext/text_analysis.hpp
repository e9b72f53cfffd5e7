#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "leveltext/backends.hpp"
#include "leveltext/level_lexicon.hpp"
#include "leveltext/resources.hpp"

namespace leveltext {

struct ContentLemma {
  std::string lemma;
  Level level;

  bool operator==(const ContentLemma&) const = default;
};

// Tokenized, lemmatized, content-filtered view of a text. content_lemmas is
// the multiset of content lemmas (kept in text order) with resolved levels.
struct AnalyzedText {
  Language language = Language::en;
  std::vector<std::string> sentences;
  std::vector<ContentLemma> content_lemmas;
  std::vector<MorphToken> all_tokens;
};

// Tags never counted as content words. Japanese and Korean additionally drop
// function-word tags.
bool is_excluded_pos(Language lang, Pos pos);

// Level of a single lemma: direct lookup; for Chinese, a lemma missing as a
// whole resolves to the highest level among its characters (UNKNOWN if any
// character is unknown).
Level resolve_level(const LevelLexicon& lex, std::string_view lemma);

// Resolves levels for a window of normalized lemmas. English windows first
// consume multiword phrases greedily left to right, longest phrase first,
// without overlap. When `stopwords` is given, single lemmas found in it are
// dropped after phrase matching.
std::vector<ContentLemma> match_lemmas(const LevelLexicon& lex, std::span<const std::string> lemmas,
                                       const std::unordered_set<std::string>* stopwords = nullptr);

// Builds an AnalyzedText from analyzer output.
AnalyzedText analyze_tokens(const MorphAnalysis& analysis, Language lang, const LevelLexicon& lex,
                            const std::unordered_set<std::string>& stopwords);

AnalyzedText analyze(std::string_view text, Language lang, const LevelLexicon& lex,
                     const std::unordered_set<std::string>& stopwords, const MorphAnalyzer& morph);
AnalyzedText analyze(std::string_view text, const LanguageResources& res,
                     const MorphAnalyzer& morph);

// Deduplicated content lemmas above the target (UNKNOWN is above every target).
std::set<std::string> above_level_lemmas(const AnalyzedText& a, int target);

}  // namespace leveltext
