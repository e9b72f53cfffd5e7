#include "leveltext/resources.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "leveltext/errors.hpp"
#include "leveltext/utf8.hpp"

#ifndef LEVELTEXT_SOURCE_DATA_DIR
#define LEVELTEXT_SOURCE_DATA_DIR "data"
#endif

namespace leveltext {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lines.empty() && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::stringstream ss(line);
  std::string col;
  while (std::getline(ss, col, '\t')) cols.push_back(col);
  return cols;
}

bool is_comment_or_blank(const std::string& line) {
  std::string t = utf8::trim(line);
  return t.empty() || t[0] == '#';
}

}  // namespace

const std::vector<std::string>* SynonymTable::find(std::string_view word) const {
  for (const auto& [w, alts] : rows) {
    if (w == word) return &alts;
  }
  return nullptr;
}

std::unordered_set<std::string> load_word_list(const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const auto& line : read_lines(path)) {
    if (is_comment_or_blank(line)) continue;
    out.insert(utf8::trim(line));
  }
  return out;
}

SynonymTable load_synonyms(const std::filesystem::path& path, Language lang) {
  SynonymTable table;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2) throw ParseError(path.string(), line_no, "expected word<TAB>alternatives");
    std::vector<std::string> alts;
    std::stringstream ss(cols[1]);
    std::string alt;
    while (std::getline(ss, alt, '|')) {
      alt = normalize_lemma(lang, alt);
      if (!alt.empty()) alts.push_back(alt);
    }
    if (alts.empty()) throw ParseError(path.string(), line_no, "no alternatives");
    table.rows.emplace_back(normalize_lemma(lang, cols[0]), std::move(alts));
  }
  return table;
}

LemmaTable load_lemma_table(const std::filesystem::path& path, Language lang) {
  LemmaTable table;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 3) throw ParseError(path.string(), line_no, "expected surface<TAB>lemma<TAB>POS");
    Pos pos;
    try {
      pos = parse_pos(utf8::trim(cols[2]));
    } catch (const Error& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
    std::string surface = lang == Language::en ? utf8::to_lower_ascii(utf8::trim(cols[0]))
                                                : utf8::trim(cols[0]);
    table.entries[surface] = {normalize_lemma(lang, cols[1]), pos};
  }
  return table;
}

ResourceBundle ResourceBundle::load(const std::filesystem::path& data_dir,
                                    const std::vector<Language>& languages,
                                    const std::optional<std::filesystem::path>& lexicon_dir) {
  ResourceBundle bundle;
  for (Language lang : languages) {
    const std::string code(language_code(lang));
    auto lex_path = lexicon_dir.value_or(data_dir / "lexicon") / lexicon_file_name(lang);
    auto lexicon = load_lexicon(lex_path, LevelScale::for_language(lang));
    auto stop_path = data_dir / "stopwords" / ("stopwords_" + code + ".txt");
    auto res = std::make_shared<LanguageResources>(LanguageResources{
        lang, std::move(lexicon), load_word_list(stop_path), {}, {}, {}});
    auto syn_path = data_dir / "synonyms" / ("synonyms_" + code + ".tsv");
    if (std::filesystem::exists(syn_path)) res->synonyms = load_synonyms(syn_path, lang);
    auto lemma_path = data_dir / "morph" / ("lemmas_" + code + ".tsv");
    if (std::filesystem::exists(lemma_path)) res->lemmas = load_lemma_table(lemma_path, lang);
    auto head_path = data_dir / "corpus" / ("reference_headings_" + code + ".txt");
    if (std::filesystem::exists(head_path)) {
      for (const auto& line : read_lines(head_path)) {
        if (!is_comment_or_blank(line)) res->reference_headings.push_back(utf8::trim(line));
      }
    }
    bundle.add(std::move(res));
  }
  return bundle;
}

void ResourceBundle::add(std::shared_ptr<const LanguageResources> res) {
  Language lang = res->language;
  by_lang_[lang] = std::move(res);
}

const LanguageResources& ResourceBundle::at(Language lang) const {
  auto it = by_lang_.find(lang);
  if (it == by_lang_.end()) {
    throw Error("no resources loaded for language " + std::string(language_code(lang)));
  }
  return *it->second;
}

std::vector<Language> ResourceBundle::languages() const {
  std::vector<Language> out;
  for (const auto& [lang, res] : by_lang_) out.push_back(lang);
  return out;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("LEVELTEXT_DATA_DIR"); env && *env) return env;
  return LEVELTEXT_SOURCE_DATA_DIR;
}

}  // namespace leveltext
