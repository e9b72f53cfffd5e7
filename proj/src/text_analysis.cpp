#include "leveltext/text_analysis.hpp"

#include <algorithm>

#include "leveltext/errors.hpp"
#include "leveltext/utf8.hpp"

namespace leveltext {

bool is_excluded_pos(Language lang, Pos pos) {
  switch (pos) {
    case Pos::SYM:
    case Pos::PUNCT:
    case Pos::SPACE:
    case Pos::X:
    case Pos::PROPN:
      return true;
    case Pos::ADP:
    case Pos::AUX:
    case Pos::PART:
    case Pos::SCONJ:
    case Pos::CCONJ:
    case Pos::DET:
    case Pos::PRON:
      return lang == Language::ja || lang == Language::ko;
    default:
      return false;
  }
}

Level resolve_level(const LevelLexicon& lex, std::string_view lemma) {
  Level direct = lex.lookup(lemma);
  if (!direct.is_unknown() || lex.language() != Language::zh) return direct;
  auto chars = utf8::code_points(lemma);
  if (chars.size() < 2) return direct;
  Level worst = Level::of(0);
  for (const auto& c : chars) {
    Level l = lex.lookup(c);
    if (l.is_unknown()) return Level::unknown();
    worst = std::max(worst, l);
  }
  return worst;
}

namespace {

// stop[i] marks lemmas that are dropped unless consumed by a phrase.
std::vector<ContentLemma> match_window(const LevelLexicon& lex, std::span<const std::string> lemmas,
                                       const std::vector<bool>& stop) {
  std::vector<ContentLemma> out;
  const bool phrases = lex.language() == Language::en && !lex.phrase_index().empty();
  std::size_t i = 0;
  while (i < lemmas.size()) {
    if (phrases) {
      const Phrase* hit = nullptr;
      for (std::size_t idx : lex.phrases_starting_with(lemmas[i])) {
        const Phrase& p = lex.phrase_index()[idx];
        if (i + p.tokens.size() > lemmas.size()) continue;
        if (std::equal(p.tokens.begin(), p.tokens.end(), lemmas.begin() + static_cast<long>(i))) {
          hit = &p;
          break;
        }
      }
      if (hit) {
        out.push_back({hit->lemma, lex.lookup(hit->lemma)});
        i += hit->tokens.size();
        continue;
      }
    }
    if (!stop[i]) out.push_back({lemmas[i], resolve_level(lex, lemmas[i])});
    ++i;
  }
  return out;
}

}  // namespace

std::vector<ContentLemma> match_lemmas(const LevelLexicon& lex, std::span<const std::string> lemmas,
                                       const std::unordered_set<std::string>* stopwords) {
  std::vector<bool> stop(lemmas.size(), false);
  if (stopwords) {
    for (std::size_t i = 0; i < lemmas.size(); ++i) stop[i] = stopwords->count(lemmas[i]) != 0;
  }
  return match_window(lex, lemmas, stop);
}

AnalyzedText analyze_tokens(const MorphAnalysis& analysis, Language lang, const LevelLexicon& lex,
                            const std::unordered_set<std::string>& stopwords) {
  if (lex.language() != lang) throw PreconditionError("lexicon language does not match text");
  AnalyzedText out;
  out.language = lang;
  out.sentences = analysis.sentences;
  out.all_tokens = analysis.tokens;

  // Sentence-local windows, so phrases never straddle a boundary. Stopword
  // tokens stay in the window until phrase matching has run.
  std::size_t begin = 0;
  for (std::size_t end : analysis.sentence_ends) {
    std::vector<std::string> window;
    std::vector<bool> stop;
    for (std::size_t k = begin; k < end && k < analysis.tokens.size(); ++k) {
      const MorphToken& t = analysis.tokens[k];
      if (is_excluded_pos(lang, t.pos)) continue;
      std::string lemma = normalize_lemma(lang, t.lemma);
      if (lemma.empty()) continue;
      std::string surface = lang == Language::en ? utf8::to_lower_ascii(t.surface) : t.surface;
      stop.push_back(t.is_stop || stopwords.count(lemma) || stopwords.count(surface));
      window.push_back(std::move(lemma));
    }
    for (auto& cl : match_window(lex, window, stop)) out.content_lemmas.push_back(std::move(cl));
    begin = end;
  }
  return out;
}

AnalyzedText analyze(std::string_view text, Language lang, const LevelLexicon& lex,
                     const std::unordered_set<std::string>& stopwords, const MorphAnalyzer& morph) {
  return analyze_tokens(morph.analyze(text, lang), lang, lex, stopwords);
}

AnalyzedText analyze(std::string_view text, const LanguageResources& res,
                     const MorphAnalyzer& morph) {
  return analyze(text, res.language, res.lexicon, res.stopwords, morph);
}

std::set<std::string> above_level_lemmas(const AnalyzedText& a, int target) {
  std::set<std::string> out;
  for (const auto& cl : a.content_lemmas) {
    if (cl.level > Level::of(target)) out.insert(cl.lemma);
  }
  return out;
}

}  // namespace leveltext
