#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "leveltext/backends.hpp"
#include "leveltext/level_lexicon.hpp"

namespace leveltext {

// Rows of `word<TAB>alt1|alt2|...`, file order preserved.
struct SynonymTable {
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;

  const std::vector<std::string>* find(std::string_view word) const;
};

// Analyzer dictionary: surface form -> (lemma, tag).
struct LemmaTable {
  std::unordered_map<std::string, std::pair<std::string, Pos>> entries;
};

struct LanguageResources {
  Language language;
  LevelLexicon lexicon;
  std::unordered_set<std::string> stopwords;
  SynonymTable synonyms;
  LemmaTable lemmas;
  std::vector<std::string> reference_headings;
};

std::unordered_set<std::string> load_word_list(const std::filesystem::path& path);
SynonymTable load_synonyms(const std::filesystem::path& path, Language lang);
LemmaTable load_lemma_table(const std::filesystem::path& path, Language lang);

// Data directory layout:
//   lexicon/vocab_<lang>.tsv          (required)
//   stopwords/stopwords_<lang>.txt    (required)
//   synonyms/synonyms_<lang>.tsv      (optional)
//   morph/lemmas_<lang>.tsv           (optional)
//   corpus/reference_headings_<lang>.txt (optional)
class ResourceBundle {
 public:
  static ResourceBundle load(const std::filesystem::path& data_dir,
                             const std::vector<Language>& languages = {Language::en, Language::ja,
                                                                       Language::ko, Language::zh},
                             const std::optional<std::filesystem::path>& lexicon_dir = {});

  void add(std::shared_ptr<const LanguageResources> res);
  bool has(Language lang) const { return by_lang_.count(lang) != 0; }
  const LanguageResources& at(Language lang) const;
  std::vector<Language> languages() const;

 private:
  std::map<Language, std::shared_ptr<const LanguageResources>> by_lang_;
};

// LEVELTEXT_DATA_DIR if set, else the data/ directory of the source tree.
std::filesystem::path default_data_dir();

}  // namespace leveltext
