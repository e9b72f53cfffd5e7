#include "leveltext/mock_backends.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "leveltext/prompts.hpp"
#include "leveltext/segment.hpp"
#include "leveltext/utf8.hpp"

namespace leveltext {

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

bool is_word_char(char32_t cp) {
  return utf8::is_ascii_alpha(cp) || utf8::is_digit(cp);
}

// Whitespace pieces with Han/kana split out. `lead` marks pieces preceded by
// whitespace.
struct Piece {
  std::string text;
  bool lead;
};

std::vector<Piece> split_pieces(std::string_view text) {
  std::vector<Piece> out;
  bool first = true;
  for (const auto& ws : utf8::split_whitespace(text)) {
    bool lead = !first;
    first = false;
    std::u32string run;
    auto flush_run = [&] {
      if (run.empty()) return;
      out.push_back({utf8::encode(run), lead});
      lead = false;
      run.clear();
    };
    for (char32_t cp : utf8::decode(ws)) {
      if (utf8::is_cjk(cp)) {
        flush_run();
        out.push_back({utf8::encode(cp), lead});
        lead = false;
      } else {
        run.push_back(cp);
      }
    }
    flush_run();
  }
  return out;
}

// Boundary rules shared by the canonicalizer and the mock policy.
bool boundary_ok(const std::u32string& cps, std::size_t start, std::size_t len) {
  char32_t first = cps[start];
  char32_t prev = start > 0 ? cps[start - 1] : U' ';
  if (utf8::is_ascii_alpha(first)) {
    char32_t next = start + len < cps.size() ? cps[start + len] : U' ';
    return !is_word_char(prev) && !is_word_char(next);
  }
  if (utf8::is_hangul(first)) return !utf8::is_hangul(prev);
  return true;
}

std::u32string lower_ascii(std::u32string s) {
  for (auto& cp : s) {
    if (cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
  }
  return s;
}

std::multiset<std::string> piece_multiset(std::string_view text, const Canonicalizer* canon) {
  std::string t = canon ? canon->apply(text) : std::string(text);
  auto pieces = mock_pieces(t);
  return {pieces.begin(), pieces.end()};
}

// ---- closed-class tables -------------------------------------------------

struct ClosedClass {
  std::unordered_map<std::string, std::pair<std::string, Pos>> words;
  void add(Pos pos, std::initializer_list<const char*> ws) {
    for (const char* w : ws) words.emplace(w, std::make_pair(std::string(w), pos));
  }
  void add_lemma(Pos pos, const char* lemma, std::initializer_list<const char*> ws) {
    for (const char* w : ws) words.emplace(w, std::make_pair(std::string(lemma), pos));
  }
  const std::pair<std::string, Pos>* find(const std::string& w) const {
    auto it = words.find(w);
    return it == words.end() ? nullptr : &it->second;
  }
};

ClosedClass english_closed_class() {
  ClosedClass c;
  c.add(Pos::DET, {"the", "a", "an", "this", "that", "these", "those", "some", "any", "each",
                   "every", "no", "all", "both", "either", "neither", "another", "such", "what",
                   "which", "whose"});
  c.add(Pos::PRON,
        {"i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself", "he", "him", "his",
         "himself", "she", "her", "hers", "herself", "it", "its", "itself", "we", "us", "our",
         "ours", "ourselves", "they", "them", "their", "theirs", "themselves", "who", "whom",
         "someone", "anyone", "everyone", "nobody", "something", "anything", "everything",
         "nothing"});
  c.add(Pos::ADP,
        {"of", "in", "on", "at", "by", "for", "with", "about", "against", "between", "into",
         "through", "during", "before", "after", "above", "below", "to", "from", "up", "down",
         "out", "off", "over", "under", "near", "across", "along", "among", "around", "behind",
         "beyond", "within", "without", "upon", "toward", "towards", "via"});
  c.add_lemma(Pos::AUX, "be", {"be", "am", "is", "are", "was", "were", "been", "being"});
  c.add_lemma(Pos::AUX, "have", {"have", "has", "had", "having"});
  c.add_lemma(Pos::AUX, "do", {"do", "does", "did"});
  c.add(Pos::AUX, {"will", "would", "shall", "should", "can", "could", "may", "might", "must"});
  c.add(Pos::CCONJ, {"and", "or", "but", "nor", "yet", "so"});
  c.add(Pos::SCONJ, {"because", "although", "though", "while", "if", "unless", "since", "whereas",
                     "whether", "until", "once", "than"});
  c.add(Pos::PART, {"not", "n't", "'s", "’s"});
  c.add(Pos::INTJ, {"oh", "wow", "hello", "yes"});
  return c;
}

ClosedClass japanese_closed_class() {
  ClosedClass c;
  c.add(Pos::ADP, {"は", "が", "を", "に", "へ", "と", "で", "から", "まで", "より", "の", "や"});
  c.add(Pos::PART, {"も", "か", "ね", "よ", "ば", "て"});
  c.add(Pos::AUX, {"です", "ます", "でした", "ました", "だ", "た", "ない", "れる", "られる",
                   "せる", "させる", "ません"});
  c.add(Pos::PRON, {"私", "わたし", "彼", "彼女", "これ", "それ", "あれ", "ここ", "そこ"});
  c.add(Pos::SCONJ, {"ので", "けれど", "けど", "ながら"});
  c.add(Pos::CCONJ, {"そして", "しかし", "また"});
  return c;
}

ClosedClass korean_closed_class() {
  ClosedClass c;
  c.add(Pos::PRON, {"나", "저", "너", "우리", "그", "그녀", "이것", "그것", "저것", "여기", "거기"});
  c.add(Pos::DET, {"이", "그", "저", "모든", "각"});
  c.add(Pos::CCONJ, {"그리고", "그러나", "하지만", "또는", "및"});
  c.add(Pos::AUX, {"있다", "없다", "이다"});
  return c;
}

ClosedClass chinese_closed_class() {
  ClosedClass c;
  c.add(Pos::PART, {"的", "了", "着", "过", "地", "得", "吗", "呢", "吧", "之"});
  c.add(Pos::ADP, {"在", "从", "对", "把", "被", "向", "跟", "于", "为"});
  c.add(Pos::CCONJ, {"和", "与", "或", "但", "而"});
  c.add(Pos::PRON, {"我", "你", "他", "她", "它", "我们", "你们", "他们", "这", "那", "这个",
                    "那个", "其"});
  c.add(Pos::AUX, {"是", "会", "能", "要", "可以"});
  return c;
}

// Longest first.
const std::vector<std::string>& korean_particles() {
  static const std::vector<std::string> p = {
      "에서는", "에게서", "으로는", "에서", "에게", "으로", "까지", "부터", "처럼", "보다", "한테",
      "은", "는", "이", "가", "을", "를", "에", "의", "로", "와", "과", "도", "만"};
  return p;
}

bool is_symbol(char32_t cp) {
  return cp == '$' || cp == '%' || cp == '+' || cp == '=' || cp == '<' || cp == '>' ||
         cp == '~' || cp == '^' || cp == '|' || cp == '@' || cp == '#' || cp == '&' || cp == '*';
}

Pos punct_pos(const std::string& s) {
  auto cps = utf8::decode(s);
  return cps.size() == 1 && is_symbol(cps[0]) ? Pos::SYM : Pos::PUNCT;
}

bool all_punct(const std::u32string& cps) {
  return !cps.empty() && std::all_of(cps.begin(), cps.end(), [](char32_t c) {
           return utf8::is_punct(c);
         });
}

}  // namespace

// ---- Canonicalizer ------------------------------------------------------

Canonicalizer::Canonicalizer(const ResourceBundle& bundle) {
  for (Language lang : bundle.languages()) {
    for (const auto& [head, alts] : bundle.at(lang).synonyms.rows) {
      add(head, head);
      for (const auto& alt : alts) add(alt, head);
    }
  }
}

void Canonicalizer::add(std::string_view variant, std::string_view canonical) {
  std::string key = utf8::encode(lower_ascii(utf8::decode(variant)));
  if (key.empty()) return;
  max_len_ = std::max(max_len_, utf8::length(key));
  map_.emplace(std::move(key), utf8::encode(lower_ascii(utf8::decode(canonical))));
}

std::string Canonicalizer::apply(std::string_view text) const {
  const std::u32string cps = lower_ascii(utf8::decode(text));
  std::string out;
  std::size_t i = 0;
  while (i < cps.size()) {
    bool matched = false;
    for (std::size_t len = std::min(max_len_, cps.size() - i); len >= 1; --len) {
      auto it = map_.find(utf8::encode(std::u32string_view(cps).substr(i, len)));
      if (it != map_.end() && boundary_ok(cps, i, len)) {
        out += it->second;
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) out += utf8::encode(cps[i++]);
  }
  return out;
}

std::vector<std::string> mock_pieces(std::string_view text) {
  std::vector<std::string> out;
  for (auto& p : split_pieces(text)) {
    auto cps = lower_ascii(utf8::decode(p.text));
    std::size_t b = 0;
    std::size_t e = cps.size();
    while (b < e && utf8::is_punct(cps[b])) ++b;
    while (e > b && utf8::is_punct(cps[e - 1])) --e;
    if (b < e) out.push_back(utf8::encode(std::u32string_view(cps).substr(b, e - b)));
  }
  return out;
}

// ---- MockMorphAnalyzer --------------------------------------------------

struct MockMorphAnalyzer::LangData {
  Language lang;
  const LanguageResources* res;
  std::unordered_set<std::string> known;
  std::size_t max_known_len = 1;
  ClosedClass closed;

  bool is_known(const std::string& w) const { return known.count(w) != 0; }

  bool is_stop(const MorphToken& t) const {
    if (res->stopwords.count(t.lemma)) return true;
    std::string s = lang == Language::en ? utf8::to_lower_ascii(t.surface) : t.surface;
    return res->stopwords.count(s) != 0;
  }

  // English lemma of a lowercase word; pos is set from the rule used.
  std::string english_lemma(const std::string& w, Pos& pos) const {
    if (auto it = res->lemmas.entries.find(w); it != res->lemmas.entries.end()) {
      pos = it->second.second;
      return it->second.first;
    }
    if (const auto* cc = closed.find(w)) {
      pos = cc->second;
      return cc->first;
    }
    pos = Pos::NOUN;
    if (is_known(w)) return w;
    auto ends = [&](std::string_view suf) {
      return w.size() > suf.size() + 1 && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
    };
    auto stem = [&](std::size_t cut) { return w.substr(0, w.size() - cut); };
    std::vector<std::pair<std::string, Pos>> cands;
    if (ends("ies")) cands.push_back({stem(3) + "y", Pos::NOUN});
    if (ends("es")) cands.push_back({stem(2), Pos::NOUN});
    if (ends("s") && !ends("ss")) cands.push_back({stem(1), Pos::NOUN});
    if (ends("ied")) cands.push_back({stem(3) + "y", Pos::VERB});
    if (ends("ed")) {
      cands.push_back({stem(2), Pos::VERB});
      cands.push_back({stem(1), Pos::VERB});
      auto s = stem(2);
      if (s.size() >= 2 && s[s.size() - 1] == s[s.size() - 2]) {
        cands.push_back({s.substr(0, s.size() - 1), Pos::VERB});
      }
    }
    if (ends("ing")) {
      auto s = stem(3);
      cands.push_back({s, Pos::VERB});
      cands.push_back({s + "e", Pos::VERB});
      if (s.size() >= 2 && s[s.size() - 1] == s[s.size() - 2]) {
        cands.push_back({s.substr(0, s.size() - 1), Pos::VERB});
      }
    }
    for (const auto& [c, p] : cands) {
      if (is_known(c)) {
        pos = p;
        return c;
      }
    }
    if (ends("ly")) pos = Pos::ADV;
    return w;
  }

  bool english_common(const std::string& lower) const {
    if (closed.find(lower) || res->lemmas.entries.count(lower) || is_known(lower)) return true;
    Pos p;
    return english_lemma(lower, p) != lower;
  }

  MorphToken tag_english(const std::string& surface, bool sentence_initial) const {
    MorphToken t{surface, surface, Pos::X, false};
    auto cps = utf8::decode(surface);
    if (all_punct(cps)) {
      t.pos = punct_pos(surface);
    } else if (utf8::is_digit(cps[0])) {
      t.pos = Pos::NUM;
    } else {
      std::string lower = utf8::to_lower_ascii(surface);
      bool capitalized = cps[0] >= 'A' && cps[0] <= 'Z';
      bool proper = capitalized && (!sentence_initial || !english_common(lower)) &&
                    !closed.find(lower);
      if (proper) {
        t.pos = Pos::PROPN;
      } else {
        t.lemma = english_lemma(lower, t.pos);
      }
    }
    t.is_stop = t.pos != Pos::PROPN && is_stop(t);
    return t;
  }

  MorphToken tag_verbatim(const std::string& surface) const {
    MorphToken t{surface, surface, Pos::NOUN, false};
    auto cps = utf8::decode(surface);
    if (all_punct(cps)) {
      t.pos = punct_pos(surface);
    } else if (utf8::is_digit(cps[0])) {
      t.pos = Pos::NUM;
    } else if (utf8::is_ascii_alpha(cps[0])) {
      t.pos = Pos::X;
    } else if (auto it = res->lemmas.entries.find(surface); it != res->lemmas.entries.end()) {
      t.lemma = it->second.first;
      t.pos = it->second.second;
    } else if (const auto* cc = closed.find(surface)) {
      t.pos = cc->second;
    }
    // Japanese keeps source lemmas: lemma is always the surface form.
    if (lang == Language::ja) t.lemma = surface;
    t.is_stop = is_stop(t);
    return t;
  }

  // Splits a whitespace chunk into leading punctuation, core, trailing
  // punctuation; English possessive/negation clitics are split off the core.
  std::vector<std::string> split_chunk(const std::string& chunk) const {
    auto cps = utf8::decode(chunk);
    std::size_t b = 0;
    std::size_t e = cps.size();
    std::vector<std::string> lead;
    std::vector<std::string> trail;
    while (b < e && utf8::is_punct(cps[b])) lead.push_back(utf8::encode(cps[b++]));
    while (e > b && utf8::is_punct(cps[e - 1])) trail.push_back(utf8::encode(cps[--e]));
    std::vector<std::string> out = lead;
    if (b < e) {
      std::u32string core = cps.substr(b, e - b);
      std::string clitic;
      if (lang == Language::en) {
        for (std::u32string suf : {std::u32string(U"'s"), std::u32string(U"’s"),
                                   std::u32string(U"n't")}) {
          if (core.size() > suf.size() && lower_ascii(core).ends_with(suf)) {
            clitic = utf8::encode(core.substr(core.size() - suf.size()));
            core.resize(core.size() - suf.size());
            break;
          }
        }
      }
      out.push_back(utf8::encode(core));
      if (!clitic.empty()) out.push_back(clitic);
    }
    out.insert(out.end(), trail.rbegin(), trail.rend());
    return out;
  }

  std::vector<MorphToken> tokenize_sentence(const std::string& sentence) const {
    std::vector<MorphToken> toks;
    switch (lang) {
      case Language::en: {
        bool initial = true;
        for (const auto& chunk : utf8::split_whitespace(sentence)) {
          for (const auto& piece : split_chunk(chunk)) {
            auto t = tag_english(piece, initial);
            if (t.pos != Pos::PUNCT && t.pos != Pos::SYM) initial = false;
            toks.push_back(std::move(t));
          }
        }
        break;
      }
      case Language::ko: {
        for (const auto& chunk : utf8::split_whitespace(sentence)) {
          for (const auto& piece : split_chunk(chunk)) {
            for (auto& t : split_korean(piece)) toks.push_back(std::move(t));
          }
        }
        break;
      }
      case Language::ja:
      case Language::zh:
        for (const auto& s : segment_cjk(sentence)) toks.push_back(tag_verbatim(s));
        break;
    }
    return toks;
  }

  std::vector<MorphToken> split_korean(const std::string& eojeol) const {
    auto cps = utf8::decode(eojeol);
    if (all_punct(cps) || res->lemmas.entries.count(eojeol) || is_known(eojeol) ||
        !utf8::is_hangul(cps.back())) {
      return {tag_verbatim(eojeol)};
    }
    for (const auto& particle : korean_particles()) {
      if (eojeol.size() > particle.size() && eojeol.ends_with(particle)) {
        std::string stem = eojeol.substr(0, eojeol.size() - particle.size());
        MorphToken s = tag_verbatim(stem);
        if (s.pos == Pos::DET) s.pos = Pos::NOUN;
        MorphToken p{particle, particle, Pos::ADP, false};
        p.is_stop = is_stop(p);
        return {std::move(s), std::move(p)};
      }
    }
    return {tag_verbatim(eojeol)};
  }

  std::vector<std::string> segment_cjk(const std::string& sentence) const {
    std::vector<std::string> out;
    const auto cps = utf8::decode(sentence);
    std::size_t i = 0;
    while (i < cps.size()) {
      char32_t cp = cps[i];
      if (utf8::is_space(cp)) {
        ++i;
        continue;
      }
      if (utf8::is_punct(cp) || is_symbol(cp)) {
        out.push_back(utf8::encode(cp));
        ++i;
        continue;
      }
      if (!utf8::is_cjk(cp)) {
        // Latin, digit, Hangul or other runs stay whole.
        std::size_t j = i;
        while (j < cps.size() && !utf8::is_cjk(cps[j]) && !utf8::is_space(cps[j]) &&
               !utf8::is_punct(cps[j]) && !is_symbol(cps[j])) {
          ++j;
        }
        out.push_back(utf8::encode(std::u32string_view(cps).substr(i, j - i)));
        i = j;
        continue;
      }
      std::size_t best = 0;
      for (std::size_t len = std::min(max_known_len, cps.size() - i); len >= 1; --len) {
        if (is_known(utf8::encode(std::u32string_view(cps).substr(i, len)))) {
          best = len;
          break;
        }
      }
      if (best == 0) {
        best = 1;
        auto is_katakana = [](char32_t c) { return (c >= 0x30A0 && c <= 0x30FF); };
        if (lang == Language::ja && is_katakana(cp)) {
          while (i + best < cps.size() && is_katakana(cps[i + best])) ++best;
        }
      }
      out.push_back(utf8::encode(std::u32string_view(cps).substr(i, best)));
      i += best;
    }
    return out;
  }
};

MockMorphAnalyzer::MockMorphAnalyzer(std::shared_ptr<const ResourceBundle> bundle)
    : bundle_(std::move(bundle)) {
  for (Language lang : bundle_->languages()) {
    auto d = std::make_shared<LangData>();
    d->lang = lang;
    d->res = &bundle_->at(lang);
    for (const auto& e : d->res->lexicon.sorted_entries()) d->known.insert(e.lemma);
    for (const auto& w : d->res->stopwords) d->known.insert(w);
    for (const auto& [surface, lp] : d->res->lemmas.entries) {
      d->known.insert(surface);
      d->known.insert(lp.first);
    }
    for (const auto& [head, alts] : d->res->synonyms.rows) {
      d->known.insert(head);
      d->known.insert(alts.begin(), alts.end());
    }
    switch (lang) {
      case Language::en: d->closed = english_closed_class(); break;
      case Language::ja: d->closed = japanese_closed_class(); break;
      case Language::ko: d->closed = korean_closed_class(); break;
      case Language::zh: d->closed = chinese_closed_class(); break;
    }
    for (const auto& [w, lp] : d->closed.words) d->known.insert(w);
    for (const auto& w : d->known) d->max_known_len = std::max(d->max_known_len, utf8::length(w));
    data_[lang] = std::move(d);
  }
}

MorphAnalysis MockMorphAnalyzer::analyze(std::string_view text, Language lang) const {
  auto it = data_.find(lang);
  if (it == data_.end()) {
    throw Error("mock analyzer: unsupported language " + std::string(language_code(lang)));
  }
  MorphAnalysis out;
  for (auto& sentence : split_sentences(text)) {
    auto toks = it->second->tokenize_sentence(sentence);
    if (toks.empty()) continue;
    for (auto& t : toks) out.tokens.push_back(std::move(t));
    out.sentence_ends.push_back(out.tokens.size());
    out.sentences.push_back(std::move(sentence));
  }
  return out;
}

// ---- MockTokenizer ------------------------------------------------------

MockTokenizer::MockTokenizer(std::vector<std::string> vocabulary) {
  std::set<std::string> uniq(vocabulary.begin(), vocabulary.end());
  uniq.erase("");
  vocab_.assign(uniq.begin(), uniq.end());
  for (std::size_t i = 0; i < vocab_.size(); ++i) index_.emplace(vocab_[i], i);
}

namespace {
std::vector<std::string> bundle_vocabulary(const ResourceBundle& bundle) {
  std::vector<std::string> v;
  for (Language lang : bundle.languages()) {
    const auto& r = bundle.at(lang);
    for (const auto& e : r.lexicon.sorted_entries()) {
      if (e.lemma.find(' ') == std::string::npos) v.push_back(e.lemma);
    }
    v.insert(v.end(), r.stopwords.begin(), r.stopwords.end());
    for (const auto& [s, lp] : r.lemmas.entries) v.push_back(s);
    for (const auto& [head, alts] : r.synonyms.rows) {
      v.push_back(head);
      v.insert(v.end(), alts.begin(), alts.end());
    }
  }
  for (const char* p : {".", ",", "!", "?", ";", ":", "(", ")", "\"", "'"}) v.push_back(p);
  // Han/kana words are split into code points by the tokenizer, so their
  // characters need ids of their own.
  std::vector<std::string> chars;
  for (const auto& w : v) {
    for (char32_t cp : utf8::decode(w)) {
      if (utf8::is_cjk(cp)) chars.push_back(utf8::encode(cp));
    }
  }
  v.insert(v.end(), chars.begin(), chars.end());
  return v;
}
}  // namespace

MockTokenizer::MockTokenizer(const ResourceBundle& bundle)
    : MockTokenizer(bundle_vocabulary(bundle)) {}

std::size_t MockTokenizer::count(std::string_view text) const { return split_pieces(text).size(); }

TokenId MockTokenizer::id_of(std::string_view piece, bool leading_space) const {
  auto it = index_.find(std::string(piece));
  if (it == index_.end()) return -1;
  return kVocabBase + 2 * static_cast<TokenId>(it->second) + (leading_space ? 1 : 0);
}

std::vector<TokenId> MockTokenizer::encode(std::string_view text) const {
  std::vector<TokenId> ids;
  for (const auto& p : split_pieces(text)) {
    TokenId id = id_of(p.text, p.lead);
    if (id >= 0) {
      ids.push_back(id);
      continue;
    }
    if (p.lead) ids.push_back(kByteBase + ' ');
    for (unsigned char c : p.text) ids.push_back(kByteBase + c);
  }
  return ids;
}

std::string MockTokenizer::detokenize(std::span<const TokenId> ids) const {
  std::string out;
  for (TokenId id : ids) {
    if (id >= kByteBase && id < kVocabBase) {
      out.push_back(static_cast<char>(id - kByteBase));
      continue;
    }
    auto idx = static_cast<std::size_t>((id - kVocabBase) / 2);
    if (id < kVocabBase || idx >= vocab_.size()) {
      throw Error("mock tokenizer: unknown token id " + std::to_string(id));
    }
    if ((id - kVocabBase) % 2 == 1) out.push_back(' ');
    out += vocab_[idx];
  }
  return out;
}

// ---- MockSimilarity / MockEntailment ------------------------------------

double MockSimilarity::score(std::string_view reference, std::string_view candidate) const {
  auto ref = piece_multiset(reference, canon_.get());
  auto cand = piece_multiset(candidate, canon_.get());
  if (ref.empty() && cand.empty()) return 1.0;
  if (ref.empty() || cand.empty()) return 0.0;
  std::vector<std::string> common;
  std::set_intersection(ref.begin(), ref.end(), cand.begin(), cand.end(),
                        std::back_inserter(common));
  if (common.empty()) return 0.0;
  double overlap = static_cast<double>(common.size());
  double precision = overlap / static_cast<double>(cand.size());
  double recall = overlap / static_cast<double>(ref.size());
  return 2.0 * precision * recall / (precision + recall);
}

bool MockEntailment::entails(std::string_view premise, std::string_view hypothesis) const {
  auto p = piece_multiset(premise, canon_.get());
  auto h = piece_multiset(hypothesis, canon_.get());
  return std::includes(p.begin(), p.end(), h.begin(), h.end());
}

// ---- MockChatModel ------------------------------------------------------

MockChatModel::MockChatModel(std::shared_ptr<const ResourceBundle> bundle,
                             std::shared_ptr<const MorphAnalyzer> morph, MockChatOptions options)
    : bundle_(std::move(bundle)), morph_(std::move(morph)), options_(std::move(options)) {
  if (options_.judge_min < 0 || options_.judge_max > 100 ||
      options_.judge_min > options_.judge_max) {
    throw PreconditionError("mock judge band must satisfy 0 <= min <= max <= 100");
  }
}

Level MockChatModel::level_of(Language lang, std::string_view word) const {
  const auto& lex = bundle_->at(lang).lexicon;
  std::string norm = normalize_lemma(lang, word);
  Level direct = lex.lookup(norm);
  if (!direct.is_unknown()) return direct;
  auto analysis = morph_->analyze(std::string(word), lang);
  for (const auto& t : analysis.tokens) {
    if (t.pos == Pos::PUNCT || t.pos == Pos::SYM) continue;
    return lex.lookup(normalize_lemma(lang, t.lemma));
  }
  return Level::unknown();
}

std::string MockChatModel::simplify(Language lang, int target, std::string_view text,
                                    double temperature, std::uint64_t seed,
                                    int* substitutions) const {
  const auto& table = bundle_->at(lang).synonyms;
  std::size_t max_len = 0;
  for (const auto& [head, alts] : table.rows) max_len = std::max(max_len, utf8::length(head));

  const std::u32string cps = utf8::decode(text);
  const std::u32string lowered = lower_ascii(cps);
  const double keep_probability = 1.0 / (1.0 + std::max(0.0, temperature));
  std::string out;
  std::uint64_t occurrence = 0;
  int substituted = 0;
  std::size_t i = 0;
  while (i < cps.size()) {
    const std::vector<std::string>* alts = nullptr;
    std::size_t len = std::min(max_len, cps.size() - i);
    for (; len >= 1; --len) {
      if (!boundary_ok(cps, i, len)) continue;
      alts = table.find(utf8::encode(std::u32string_view(lowered).substr(i, len)));
      if (alts) break;
    }
    if (!alts) {
      out += utf8::encode(cps[i++]);
      continue;
    }
    std::string original = utf8::encode(std::u32string_view(cps).substr(i, len));
    Level level = level_of(lang, original);
    bool replaced = false;
    if (level > Level::of(target)) {
      const std::string* best = nullptr;
      Level best_level = Level::unknown();
      for (const auto& alt : *alts) {
        Level l = level_of(lang, alt);
        if (!best || l < best_level) {
          best = &alt;
          best_level = l;
        }
      }
      if (best && best_level < level) {
        std::uint64_t r = splitmix64(seed * 0x9E3779B97F4A7C15ULL + occurrence++);
        double u = static_cast<double>(r >> 11) * 0x1.0p-53;
        if (temperature <= 0.0 || u < keep_probability) {
          std::string alt = *best;
          if (cps[i] >= 'A' && cps[i] <= 'Z' && !alt.empty() && alt[0] >= 'a' && alt[0] <= 'z') {
            alt[0] = static_cast<char>(alt[0] - 'a' + 'A');
          }
          out += alt;
          replaced = true;
          ++substituted;
        }
      }
    }
    if (!replaced) out += original;
    i += len;
  }
  if (substitutions) *substitutions = substituted;
  return out;
}

int MockChatModel::judge_score(std::string_view prompt) const {
  std::uint64_t h = fnv1a64(prompt, fnv1a64(options_.name + '\x1f'));
  auto span = static_cast<std::uint64_t>(options_.judge_max - options_.judge_min + 1);
  return options_.judge_min + static_cast<int>(h % span);
}

std::string MockChatModel::complete(std::string_view prompt, double temperature,
                                    std::uint64_t seed) const {
  if (prompt.empty()) throw PreconditionError("empty prompt");
  if (auto req = parse_simplify_prompt(prompt)) {
    return simplify(req->language, req->level, req->original, temperature, seed);
  }
  if (parse_judge_prompt(prompt)) return std::to_string(judge_score(prompt));
  throw Error("mock chat model: unrecognized prompt");
}

BackendSuite make_mock_suite(std::shared_ptr<const ResourceBundle> bundle,
                             const MockSuiteOptions& options) {
  BackendSuite suite;
  auto morph = std::make_shared<MockMorphAnalyzer>(bundle);
  auto canon = std::make_shared<Canonicalizer>(*bundle);
  suite.morph = morph;
  suite.tokenizer = std::make_shared<MockTokenizer>(*bundle);
  suite.similarity = std::make_shared<MockSimilarity>(canon);
  suite.entailment = std::make_shared<MockEntailment>(canon);
  auto judge_a = std::make_shared<MockChatModel>(
      bundle, morph, MockChatOptions{options.judge_a, options.judge_min, options.judge_max});
  auto judge_b = std::make_shared<MockChatModel>(
      bundle, morph, MockChatOptions{options.judge_b, options.judge_min, options.judge_max});
  suite.policy = judge_a;
  suite.judges = {judge_a, judge_b};
  return suite;
}

}  // namespace leveltext
