#include "leveltext/level_lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "leveltext/errors.hpp"
#include "leveltext/utf8.hpp"

namespace leveltext {

std::string_view language_code(Language lang) {
  switch (lang) {
    case Language::en: return "en";
    case Language::ja: return "ja";
    case Language::ko: return "ko";
    case Language::zh: return "zh";
  }
  return "?";
}

std::string_view language_name(Language lang) {
  switch (lang) {
    case Language::en: return "English";
    case Language::ja: return "Japanese";
    case Language::ko: return "Korean";
    case Language::zh: return "Chinese";
  }
  return "?";
}

Language parse_language(std::string_view code) {
  std::string c = utf8::to_lower_ascii(utf8::trim(code));
  if (c == "en") return Language::en;
  if (c == "ja") return Language::ja;
  if (c == "ko") return Language::ko;
  if (c == "zh") return Language::zh;
  throw Error("unsupported language \"" + std::string(code) + "\" (expected en|ja|ko|zh)");
}

std::string to_string(Level level, const LevelScale& scale) {
  if (level.is_unknown()) return "UNKNOWN";
  return scale.label(level.ordinal());
}

LevelScale::LevelScale(Language lang, std::string name, std::vector<std::string> labels,
                       std::vector<std::pair<std::string, std::string>> aliases,
                       std::vector<std::string> display)
    : language_(lang),
      name_(std::move(name)),
      labels_(std::move(labels)),
      aliases_(std::move(aliases)),
      display_(std::move(display)) {}

const LevelScale& LevelScale::cefr() {
  static const LevelScale s(Language::en, "CEFR", {"A1", "A2", "B1", "B2", "C1", "C2"}, {},
                            {"CEFR A1", "CEFR A2", "CEFR B1", "CEFR B2", "CEFR C1", "CEFR C2"});
  return s;
}

// JLPT runs backwards: N5 is the easiest.
const LevelScale& LevelScale::jlpt() {
  static const LevelScale s(Language::ja, "JLPT", {"N5", "N4", "N3", "N2", "N1"}, {},
                            {"JLPT N5", "JLPT N4", "JLPT N3", "JLPT N2", "JLPT N1"});
  return s;
}

const LevelScale& LevelScale::topik() {
  static const LevelScale s(
      Language::ko, "TOPIK", {"TOPIK1", "TOPIK2", "TOPIK3", "TOPIK4", "TOPIK5", "TOPIK6"}, {},
      {"TOPIK Level 1", "TOPIK Level 2", "TOPIK Level 3", "TOPIK Level 4", "TOPIK Level 5",
       "TOPIK Level 6"});
  return s;
}

const LevelScale& LevelScale::hsk() {
  static const LevelScale s(
      Language::zh, "HSK", {"HSK1", "HSK2", "HSK3", "HSK4", "HSK5", "HSK6", "HSK7-9"},
      {{"HSK7", "HSK7-9"}, {"HSK8", "HSK7-9"}, {"HSK9", "HSK7-9"}},
      {"HSK Level 1", "HSK Level 2", "HSK Level 3", "HSK Level 4", "HSK Level 5", "HSK Level 6",
       "HSK Level 7-9"});
  return s;
}

const LevelScale& LevelScale::for_language(Language lang) {
  switch (lang) {
    case Language::en: return cefr();
    case Language::ja: return jlpt();
    case Language::ko: return topik();
    case Language::zh: return hsk();
  }
  throw Error("no scale for language");
}

int LevelScale::ordinal(std::string_view label) const {
  std::string key = utf8::trim(label);
  for (const auto& [alias, target] : aliases_) {
    if (key == alias) {
      key = target;
      break;
    }
  }
  auto it = std::find(labels_.begin(), labels_.end(), key);
  if (it == labels_.end()) {
    throw UnknownLevelError("unknown " + name_ + " level \"" + std::string(label) +
                            "\"; valid labels: " + utf8::join(labels_, ", "));
  }
  return static_cast<int>(it - labels_.begin());
}

const std::string& LevelScale::label(int ordinal) const {
  if (ordinal < 0 || static_cast<std::size_t>(ordinal) >= labels_.size()) {
    throw UnknownLevelError(name_ + " ordinal out of range: " + std::to_string(ordinal));
  }
  return labels_[static_cast<std::size_t>(ordinal)];
}

std::string LevelScale::display_name(int ordinal) const {
  label(ordinal);
  return display_[static_cast<std::size_t>(ordinal)];
}

std::string normalize_lemma(Language lang, std::string_view lemma) {
  if (lang != Language::en) return utf8::trim(lemma);
  return utf8::join(utf8::split_whitespace(utf8::to_lower_ascii(lemma)), " ");
}

LevelLexicon::LevelLexicon(const LevelScale& scale, const std::vector<LexiconEntry>& entries)
    : scale_(&scale) {
  const auto n_levels = static_cast<int>(scale.size());
  for (const auto& e : entries) {
    if (e.level < 0 || e.level >= n_levels) {
      throw UnknownLevelError("lexicon entry \"" + e.lemma + "\" has out-of-range ordinal " +
                              std::to_string(e.level));
    }
    std::string lemma = normalize_lemma(scale.language(), e.lemma);
    if (lemma.empty()) throw Error("lexicon entry with empty lemma");
    auto [it, inserted] = entries_.emplace(lemma, e.level);
    if (!inserted) it->second = std::min(it->second, e.level);
  }
  if (scale.language() == Language::en) {
    for (const auto& [lemma, level] : entries_) {
      auto tokens = utf8::split_whitespace(lemma);
      if (tokens.size() >= 2) phrases_.push_back({lemma, std::move(tokens)});
    }
    std::sort(phrases_.begin(), phrases_.end(), [](const Phrase& a, const Phrase& b) {
      if (a.tokens.size() != b.tokens.size()) return a.tokens.size() > b.tokens.size();
      if (a.lemma.size() != b.lemma.size()) return a.lemma.size() > b.lemma.size();
      return a.lemma < b.lemma;
    });
    for (std::size_t i = 0; i < phrases_.size(); ++i) {
      phrase_by_first_[phrases_[i].tokens.front()].push_back(i);
    }
  }
}

Level LevelLexicon::lookup(std::string_view lemma) const {
  auto it = entries_.find(std::string(lemma));
  if (it == entries_.end()) return Level::unknown();
  return Level::of(it->second);
}

bool LevelLexicon::contains(std::string_view lemma) const {
  return entries_.count(std::string(lemma)) != 0;
}

std::size_t LevelLexicon::max_phrase_tokens() const {
  return phrases_.empty() ? 0 : phrases_.front().tokens.size();
}

const std::vector<std::size_t>& LevelLexicon::phrases_starting_with(std::string_view token) const {
  static const std::vector<std::size_t> kNone;
  auto it = phrase_by_first_.find(std::string(token));
  return it == phrase_by_first_.end() ? kNone : it->second;
}

std::vector<LexiconEntry> LevelLexicon::sorted_entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto& [lemma, level] : entries_) out.push_back({lemma, level});
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) { return a.lemma < b.lemma; });
  return out;
}

LevelLexicon parse_lexicon(std::istream& in, const LevelScale& scale,
                           const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<LexiconEntry> rows;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!header_seen) {
      if (line != "lemma\tlevel") {
        throw ParseError(source_name, line_no, "expected header \"lemma<TAB>level\"");
      }
      header_seen = true;
      continue;
    }
    if (utf8::trim(line).empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (!line.empty() && line.back() == '\t') cols.emplace_back();
    if (cols.size() != 2) {
      throw ParseError(source_name, line_no,
                       "expected 2 tab-separated columns, found " + std::to_string(cols.size()));
    }
    std::string lemma = normalize_lemma(scale.language(), cols[0]);
    if (lemma.empty()) throw ParseError(source_name, line_no, "empty lemma");
    int level = 0;
    try {
      level = scale.ordinal(cols[1]);
    } catch (const UnknownLevelError& e) {
      throw ParseError(source_name, line_no, e.what());
    }
    rows.push_back({std::move(lemma), level});
  }
  if (!header_seen) throw EmptyLexiconError(source_name + ": empty lexicon file");
  if (rows.empty()) throw EmptyLexiconError(source_name + ": lexicon has no data rows");
  return LevelLexicon(scale, rows);
}

LevelLexicon load_lexicon(const std::filesystem::path& path, const LevelScale& scale) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file " + path.string());
  return parse_lexicon(in, scale, path.string());
}

std::string lexicon_file_name(Language lang) {
  return "vocab_" + std::string(language_code(lang)) + ".tsv";
}

}  // namespace leveltext
