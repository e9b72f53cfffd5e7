#include "leveltext/corpus_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "leveltext/errors.hpp"
#include "leveltext/segment.hpp"
#include "leveltext/utf8.hpp"

namespace leveltext {

std::string_view to_string(CorpusSource s) {
  return s == CorpusSource::wikipedia ? "wikipedia" : "pgv";
}

CorpusSource parse_source(std::string_view s) {
  if (s == "wikipedia") return CorpusSource::wikipedia;
  if (s == "pgv") return CorpusSource::pgv;
  throw Error("unknown corpus source '" + std::string(s) + "'");
}

bool CorpusChunk::has_flag(std::string_view f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

nlohmann::json to_json(const CorpusChunk& c) {
  nlohmann::json j = {{"id", c.id},
                      {"language", std::string(language_code(c.language))},
                      {"source", std::string(to_string(c.source))},
                      {"target_level", nullptr},
                      {"text", c.text},
                      {"token_count", c.token_count},
                      {"paragraph_count", c.paragraph_count},
                      {"flags", c.flags}};
  if (c.target_level) j["target_level"] = *c.target_level;
  return j;
}

CorpusChunk chunk_from_json(const nlohmann::json& j) {
  CorpusChunk c;
  try {
    c.id = j.at("id").get<std::string>();
    c.language = parse_language(j.at("language").get<std::string>());
    c.source = parse_source(j.at("source").get<std::string>());
    c.text = j.at("text").get<std::string>();
    c.token_count = j.at("token_count").get<std::size_t>();
    c.paragraph_count = j.value("paragraph_count", std::size_t{0});
    if (j.contains("target_level") && !j["target_level"].is_null()) {
      c.target_level = j["target_level"].get<std::string>();
    }
    if (j.contains("flags")) c.flags = j["flags"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed chunk record: ") + e.what());
  }
  if (c.text.empty()) throw Error("chunk " + c.id + " has empty text");
  return c;
}

void write_chunks_jsonl(std::ostream& out, const std::vector<CorpusChunk>& chunks) {
  for (const auto& c : chunks) out << to_json(c).dump() << '\n';
}

std::vector<CorpusChunk> read_chunks_jsonl(std::istream& in) {
  std::vector<CorpusChunk> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (utf8::trim(line).empty()) continue;
    try {
      out.push_back(chunk_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("chunks", lineno, e.what());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError("chunks", lineno, e.what());
    }
  }
  return out;
}

namespace {

std::vector<std::string> raw_paragraphs(std::string_view article) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= article.size()) {
    auto next = article.find("\n\n", pos);
    auto piece = article.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                    : next - pos);
    auto t = utf8::trim(piece);
    if (!t.empty()) out.emplace_back(t);
    if (next == std::string_view::npos) break;
    pos = next + 2;
  }
  return out;
}

std::string fold(std::string_view s) { return utf8::to_lower_ascii(std::string(utf8::trim(s))); }

bool is_reference_paragraph(std::string_view para, const std::vector<std::string>& headings) {
  auto nl = para.find('\n');
  auto first = fold(para.substr(0, nl));
  // Tolerate wiki-style "== References ==" headings.
  auto stripped = first;
  while (!stripped.empty() && (stripped.front() == '=' || stripped.front() == ' ')) stripped.erase(0, 1);
  while (!stripped.empty() && (stripped.back() == '=' || stripped.back() == ' ')) stripped.pop_back();
  for (const auto& h : headings) {
    auto fh = fold(h);
    if (!fh.empty() && (first == fh || stripped == fh)) return true;
  }
  return false;
}

// Byte spans of each sentence inside `text`.
std::vector<std::pair<std::size_t, std::size_t>> sentence_spans(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t cursor = 0;
  for (const auto& s : split_sentences(text)) {
    auto at = text.find(s, cursor);
    if (at == std::string_view::npos) throw Error("sentence splitter lost text");
    spans.emplace_back(at, at + s.size());
    cursor = at + s.size();
  }
  return spans;
}

// Splits at token boundaries; the last resort for a single huge sentence.
std::vector<std::string> split_by_tokens(std::string_view text, const SubwordTokenizer& tok,
                                         std::size_t max_tokens) {
  auto ids = tok.encode(text);
  std::vector<std::string> out;
  std::size_t step = max_tokens;
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t n = std::min(step, ids.size() - i);
    std::string piece;
    // Detokenized text may re-tokenize differently; shrink until it fits.
    while (true) {
      piece = std::string(utf8::trim(tok.detokenize(std::span(ids).subspan(i, n))));
      if (n == 1 || tok.count(piece) <= max_tokens) break;
      --n;
    }
    // Prefer to cut where the next token starts a new word, so no word is
    // torn across two chunks. Keep the hard cut if the window has no such spot.
    auto starts_word = [&](std::size_t at) {
      if (at >= ids.size()) return true;
      auto t = tok.detokenize(std::span(ids).subspan(at, 1));
      return !t.empty() && utf8::is_space(static_cast<unsigned char>(t.front()));
    };
    if (!starts_word(i + n)) {
      std::size_t m = n;
      while (m > 1 && !starts_word(i + m)) --m;
      if (m > 1 || starts_word(i + 1)) {
        n = m;
        piece = std::string(utf8::trim(tok.detokenize(std::span(ids).subspan(i, n))));
      }
    }
    if (!piece.empty()) out.push_back(std::move(piece));
    i += n;
  }
  return out;
}

// Packs consecutive sentences of an oversized paragraph. Each piece is the
// original substring from its first sentence to its last.
std::vector<std::pair<std::string, bool>> split_oversized(std::string_view para,
                                                          const SubwordTokenizer& tok,
                                                          std::size_t max_tokens) {
  std::vector<std::pair<std::string, bool>> pieces;  // text, sentence itself too long
  auto spans = sentence_spans(para);
  std::size_t i = 0;
  while (i < spans.size()) {
    std::size_t j = i + 1;
    auto piece = [&](std::size_t a, std::size_t b) {
      return para.substr(spans[a].first, spans[b - 1].second - spans[a].first);
    };
    if (tok.count(piece(i, j)) > max_tokens) {
      for (auto& p : split_by_tokens(piece(i, j), tok, max_tokens)) pieces.emplace_back(p, true);
      i = j;
      continue;
    }
    while (j < spans.size() && tok.count(piece(i, j + 1)) <= max_tokens) ++j;
    pieces.emplace_back(std::string(piece(i, j)), false);
    i = j;
  }
  return pieces;
}

}  // namespace

std::vector<std::string> filter_paragraphs(std::string_view article,
                                           const SubwordTokenizer& tokenizer,
                                           const std::vector<std::string>& reference_headings,
                                           const ChunkOptions& options) {
  std::vector<std::string> out;
  for (auto& p : raw_paragraphs(article)) {
    if (is_reference_paragraph(p, reference_headings)) continue;
    if (tokenizer.count(p) < options.min_paragraph_tokens) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CorpusChunk> chunk_wikipedia(std::string_view article, std::string_view article_id,
                                         Language language, const SubwordTokenizer& tokenizer,
                                         const std::vector<std::string>& reference_headings,
                                         const ChunkOptions& options) {
  if (options.max_tokens == 0) throw PreconditionError("max_tokens must be positive");
  std::vector<CorpusChunk> chunks;
  auto emit = [&](std::string text, std::size_t paragraphs, std::vector<std::string> flags) {
    CorpusChunk c;
    c.id = std::string(article_id) + "-" + std::to_string(chunks.size());
    c.language = language;
    c.source = CorpusSource::wikipedia;
    c.token_count = tokenizer.count(text);
    c.text = std::move(text);
    c.paragraph_count = paragraphs;
    c.flags = std::move(flags);
    chunks.push_back(std::move(c));
  };

  std::string current;
  std::size_t current_paras = 0;
  auto flush = [&] {
    if (current_paras > 0) emit(std::move(current), current_paras, {});
    current.clear();
    current_paras = 0;
  };

  for (const auto& p : filter_paragraphs(article, tokenizer, reference_headings, options)) {
    if (tokenizer.count(p) > options.max_tokens) {
      flush();
      for (auto& [piece, too_long] : split_oversized(p, tokenizer, options.max_tokens)) {
        std::vector<std::string> flags{chunk_flags::oversized_paragraph};
        if (too_long) flags.push_back(chunk_flags::oversized_sentence);
        emit(std::move(piece), 1, std::move(flags));
      }
      continue;
    }
    if (current_paras == 0) {
      current = p;
      current_paras = 1;
      continue;
    }
    std::string joined = current + "\n\n" + p;
    if (tokenizer.count(joined) <= options.max_tokens) {
      current = std::move(joined);
      ++current_paras;
    } else {
      flush();
      current = p;
      current_paras = 1;
    }
  }
  flush();
  return chunks;
}

PgvDocument pgv_document_from_json(const nlohmann::json& j) {
  PgvDocument d;
  try {
    d.id = j.at("id").get<std::string>();
    for (const auto& p : j.at("paragraphs")) {
      PgvParagraph para;
      para.text = p.value("text", std::string());
      for (auto it = p.begin(); it != p.end(); ++it) {
        if (it.key() != "text") para.attrs[it.key()] = it.value();
      }
      if (p.contains("attrs") && p["attrs"].is_object()) {
        para.attrs.erase("attrs");
        for (auto it = p["attrs"].begin(); it != p["attrs"].end(); ++it) {
          para.attrs[it.key()] = it.value();
        }
      }
      d.paragraphs.push_back(std::move(para));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed PGV document: ") + e.what());
  }
  return d;
}

namespace {

const std::set<std::string> kDroppedPgvTypes = {"title", "caption", "contributor", "notes",
                                                "tweet-info"};

bool keep_pgv_paragraph(const PgvParagraph& p) {
  if (p.attrs.contains("crawlinfo")) return false;
  auto it = p.attrs.find("type");
  if (it != p.attrs.end() && it->is_string() && kDroppedPgvTypes.count(it->get<std::string>())) {
    return false;
  }
  return !utf8::trim(p.text).empty();
}

std::string join_space(const std::vector<std::string>& parts, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

}  // namespace

std::optional<CorpusChunk> preprocess_pgv(const PgvDocument& doc, Language language,
                                          const SubwordTokenizer& tokenizer,
                                          const PgvOptions& options) {
  std::vector<std::string> paras;
  for (const auto& p : doc.paragraphs) {
    if (keep_pgv_paragraph(p)) paras.emplace_back(utf8::trim(p.text));
  }
  if (paras.empty()) return std::nullopt;
  std::string full = join_space(paras, paras.size());
  std::size_t total = tokenizer.count(full);
  if (total < options.min_tokens) return std::nullopt;

  CorpusChunk c;
  c.id = doc.id;
  c.language = language;
  c.source = CorpusSource::pgv;
  if (total <= options.max_tokens) {
    c.text = std::move(full);
    c.paragraph_count = paras.size();
  } else {
    c.flags.push_back(chunk_flags::truncated);
    std::size_t k = 0;
    while (k < paras.size() && tokenizer.count(join_space(paras, k + 1)) <= options.max_tokens) ++k;
    if (k > 0) {
      c.text = join_space(paras, k);
      c.paragraph_count = k;
    } else {
      c.flags.push_back(chunk_flags::truncated_mid_paragraph);
      std::string_view first = paras.front();
      auto spans = sentence_spans(first);
      std::size_t s = 0;
      auto prefix = [&](std::size_t n) {
        return first.substr(spans[0].first, spans[n - 1].second - spans[0].first);
      };
      while (s < spans.size() && tokenizer.count(prefix(s + 1)) <= options.max_tokens) ++s;
      if (s > 0) {
        c.text = std::string(prefix(s));
      } else {
        c.text = split_by_tokens(first, tokenizer, options.max_tokens).at(0);
      }
      c.paragraph_count = 1;
    }
  }
  c.token_count = tokenizer.count(c.text);
  return c;
}

std::vector<CorpusChunk> expand_levels(const std::vector<CorpusChunk>& chunks,
                                       const LevelScale& scale) {
  std::vector<CorpusChunk> out;
  out.reserve(chunks.size() * scale.size());
  for (const auto& c : chunks) {
    if (c.target_level) throw PreconditionError("chunk " + c.id + " already has a target level");
    for (std::size_t i = 0; i < scale.size(); ++i) {
      CorpusChunk d = c;
      const auto& label = scale.label(static_cast<int>(i));
      d.id = c.id + "@" + label;
      d.target_level = label;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::uint64_t SplitRng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("below(0)");
  // Reject the top partial bucket so every residue is equally likely.
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

Split sample_and_split(const std::vector<CorpusChunk>& chunks, const SplitSpec& spec) {
  if (spec.test_count.has_value() == spec.test_fraction.has_value()) {
    throw PreconditionError("give exactly one of a test count or a test fraction");
  }
  if (spec.test_fraction && !(*spec.test_fraction >= 0.0 && *spec.test_fraction <= 1.0)) {
    throw PreconditionError("test fraction must lie in [0, 1]");
  }
  std::vector<bool> is_test(chunks.size(), false);
  for (std::size_t li = 0; li < std::size(kAllLanguages); ++li) {
    Language lang = kAllLanguages[li];
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      if (chunks[i].language == lang) idx.push_back(i);
    }
    if (idx.empty()) continue;
    std::size_t k;
    if (spec.test_count) {
      k = *spec.test_count;
      if (k > idx.size()) {
        throw PreconditionError("requested " + std::to_string(k) + " " +
                                std::string(language_code(lang)) + " items but only " +
                                std::to_string(idx.size()) + " exist");
      }
    } else {
      k = static_cast<std::size_t>(std::llround(*spec.test_fraction * double(idx.size())));
      k = std::min(k, idx.size());
    }
    SplitRng rng(spec.seed + li);
    rng.shuffle(idx);
    for (std::size_t i = 0; i < k; ++i) is_test[idx[i]] = true;
  }
  Split out;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    (is_test[i] ? out.test : out.train).push_back(chunks[i]);
  }
  return out;
}

}  // namespace leveltext
