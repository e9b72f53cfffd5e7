#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "leveltext/corpus_pipeline.hpp"
#include "test_support.hpp"

using namespace leveltext;

namespace {

const MockTokenizer& tokenizer() {
  static MockTokenizer t(*testsupport::bundle());
  return t;
}

const std::vector<std::string> kHeadings = {"References", "See also", "External links"};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<CorpusChunk> toy_chunks(std::size_t per_lang) {
  std::vector<CorpusChunk> out;
  for (Language l : kAllLanguages) {
    for (std::size_t i = 0; i < per_lang; ++i) {
      CorpusChunk c;
      c.id = std::string(language_code(l)) + "-" + std::to_string(i);
      c.language = l;
      c.text = "text " + c.id;
      c.token_count = 2;
      out.push_back(c);
    }
  }
  return out;
}

PgvDocument pgv(std::vector<std::pair<std::string, nlohmann::json>> paras) {
  PgvDocument d;
  d.id = "doc";
  for (auto& [t, a] : paras) d.paragraphs.push_back({t, a});
  return d;
}

}  // namespace

TEST_CASE("filter drops short paragraphs and reference sections") {
  std::mt19937_64 rng(1);
  std::string body = fixtures::paragraph(rng, 4, 8, 8);
  std::string article = "Title\n\n" + body + "\n\n  \n\n== References ==\n" +
                        fixtures::paragraph(rng, 4, 8, 8) + "\n\nSEE ALSO\n" +
                        fixtures::paragraph(rng, 4, 8, 8);
  auto paras = filter_paragraphs(article, tokenizer(), kHeadings);
  CHECK(paras == std::vector<std::string>{body});
}

TEST_CASE("chunks pack paragraphs greedily under the budget") {
  std::mt19937_64 rng(2);
  std::vector<std::string> ps;
  for (int i = 0; i < 6; ++i) ps.push_back(fixtures::paragraph(rng, 3, 10, 10));  // 30 tokens each
  ChunkOptions opt;
  opt.max_tokens = 100;
  auto chunks = chunk_wikipedia(join(ps, "\n\n"), "art", Language::en, tokenizer(), {}, opt);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0].id == "art-0");
  CHECK(chunks[1].id == "art-1");
  CHECK(chunks[0].paragraph_count == 3);
  CHECK(chunks[0].text == ps[0] + "\n\n" + ps[1] + "\n\n" + ps[2]);
  CHECK(chunks[0].token_count == 90);
  CHECK(chunks[0].flags.empty());
}

TEST_CASE("oversized paragraphs split at sentences, giant sentences at tokens") {
  std::mt19937_64 rng(3);
  std::string big = fixtures::paragraph(rng, 80, 10, 10);  // 800 tokens
  auto chunks = chunk_wikipedia(big, "a", Language::en, tokenizer(), {});
  REQUIRE(chunks.size() == 2);
  for (const auto& c : chunks) {
    CHECK(c.token_count <= kMaxChunkTokens);
    CHECK(c.has_flag(chunk_flags::oversized_paragraph));
    CHECK(!c.has_flag(chunk_flags::oversized_sentence));
    CHECK(big.find(c.text) != std::string::npos);
  }
  std::string giant = fixtures::sentence(rng, 1200);
  auto g = chunk_wikipedia(giant, "g", Language::en, tokenizer(), {});
  REQUIRE(g.size() >= 3);
  for (const auto& c : g) {
    CHECK(c.token_count <= kMaxChunkTokens);
    CHECK(c.has_flag(chunk_flags::oversized_sentence));
  }
  std::string back;
  for (const auto& c : g) back += (back.empty() ? "" : " ") + c.text;
  CHECK(fixtures::collapse_ws(back) == giant);
}

TEST_CASE("property: chunks stay in budget and reconstruct the filtered article") {
  std::mt19937_64 rng(4);
  for (std::size_t a = 0; a < 30; ++a) {
    std::string art = fixtures::article(rng, a);
    auto chunks = chunk_wikipedia(art, "x", Language::en, tokenizer(), kHeadings);
    auto paras = filter_paragraphs(art, tokenizer(), kHeadings);
    std::vector<std::string> texts;
    bool split = false;
    for (const auto& c : chunks) {
      CHECK(c.token_count <= kMaxChunkTokens);
      CHECK(tokenizer().count(c.text) == c.token_count);
      texts.push_back(c.text);
      split = split || c.has_flag(chunk_flags::oversized_paragraph);
    }
    if (split) {
      CHECK(fixtures::collapse_ws(join(texts, " ")) == fixtures::collapse_ws(join(paras, " ")));
    } else {
      CHECK(join(texts, "\n\n") == join(paras, "\n\n"));
    }
  }
}

TEST_CASE("chunks round-trip through JSONL") {
  auto chunks = chunk_wikipedia(testsupport::read_file(testsupport::data_dir() /
                                                       "fixtures/wiki/en/en_article_00.txt"),
                                "en_article_00", Language::en, tokenizer(), kHeadings);
  REQUIRE(!chunks.empty());
  chunks[0].target_level = "B1";
  std::stringstream ss;
  write_chunks_jsonl(ss, chunks);
  CHECK(read_chunks_jsonl(ss) == chunks);
  std::istringstream bad("{\"id\":\"a\"}\n");
  CHECK_THROWS_AS(read_chunks_jsonl(bad), ParseError);
}

TEST_CASE("pgv drops metadata paragraphs and joins with spaces") {
  std::mt19937_64 rng(5);
  std::string p1 = fixtures::paragraph(rng, 20, 10, 10), p2 = fixtures::paragraph(rng, 15, 10, 10);
  auto doc = pgv({{"A title", {{"type", "title"}}},
                  {p1, nlohmann::json::object()},
                  {"crawl", {{"crawlinfo", "x"}}},
                  {"cap", {{"type", "caption"}}},
                  {"   ", nlohmann::json::object()},
                  {p2, {{"type", "paragraph"}}},
                  {"by someone", {{"type", "contributor"}}}});
  auto c = preprocess_pgv(doc, Language::en, tokenizer());
  REQUIRE(c);
  CHECK(c->text == p1 + " " + p2);
  CHECK(c->token_count == 350);
  CHECK(c->flags.empty());
  CHECK(c->source == CorpusSource::pgv);
}

TEST_CASE("pgv: short documents are dropped, long ones truncated") {
  std::mt19937_64 rng(6);
  auto small = pgv({{fixtures::paragraph(rng, 29, 10, 10), nlohmann::json::object()}});
  CHECK(!preprocess_pgv(small, Language::en, tokenizer()));

  std::string p1 = fixtures::paragraph(rng, 30, 10, 10), p2 = fixtures::paragraph(rng, 30, 10, 10);
  auto two = pgv({{p1, nlohmann::json::object()}, {p2, nlohmann::json::object()}});
  auto c = preprocess_pgv(two, Language::en, tokenizer());
  REQUIRE(c);
  CHECK(c->text == p1);
  CHECK(c->has_flag(chunk_flags::truncated));
  CHECK(!c->has_flag(chunk_flags::truncated_mid_paragraph));

  std::string block = fixtures::paragraph(rng, 70, 10, 10);
  auto one = pgv({{block, nlohmann::json::object()}});
  auto d = preprocess_pgv(one, Language::en, tokenizer());
  REQUIRE(d);
  CHECK(d->token_count == 510);
  CHECK(d->has_flag(chunk_flags::truncated_mid_paragraph));
  CHECK(block.rfind(d->text, 0) == 0);
}

TEST_CASE("pgv json attrs are collected") {
  auto j = nlohmann::json::parse(
      R"({"id":"d","paragraphs":[{"text":"x","type":"title"},{"text":"y","attrs":{"crawlinfo":1}}]})");
  auto d = pgv_document_from_json(j);
  REQUIRE(d.paragraphs.size() == 2);
  CHECK(d.paragraphs[0].attrs["type"] == "title");
  CHECK(d.paragraphs[1].attrs.contains("crawlinfo"));
  CHECK_THROWS_AS(pgv_document_from_json(nlohmann::json::parse(R"({"id":"d"})")), Error);
}

TEST_CASE("expand_levels replicates across each scale") {
  auto base = toy_chunks(3);
  std::map<Language, std::size_t> expected = {
      {Language::en, 6}, {Language::ja, 5}, {Language::ko, 6}, {Language::zh, 7}};
  for (Language l : kAllLanguages) {
    std::vector<CorpusChunk> mine;
    for (const auto& c : base) {
      if (c.language == l) mine.push_back(c);
    }
    auto out = expand_levels(mine, LevelScale::for_language(l));
    CHECK(out.size() == mine.size() * expected[l]);
    std::set<std::string> ids;
    for (const auto& c : out) {
      REQUIRE(c.target_level);
      ids.insert(c.id);
    }
    CHECK(ids.size() == out.size());
    CHECK(out[0].id == mine[0].id + "@" + LevelScale::for_language(l).label(0));
    CHECK_THROWS_AS(expand_levels(out, LevelScale::for_language(l)), PreconditionError);
  }
}

TEST_CASE("split is seeded, per-language and order preserving") {
  auto chunks = toy_chunks(25);
  SplitSpec spec;
  spec.test_count = 10;
  auto a = sample_and_split(chunks, spec);
  auto b = sample_and_split(chunks, spec);
  CHECK(a.test == b.test);
  CHECK(a.train == b.train);
  CHECK(a.test.size() == 40);
  CHECK(a.train.size() == 60);
  std::map<Language, int> per;
  for (const auto& c : a.test) ++per[c.language];
  for (Language l : kAllLanguages) CHECK(per[l] == 10);
  // Input order kept: ids in each output appear in the same relative order.
  auto pos = [&](const std::string& id) {
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      if (chunks[i].id == id) return i;
    }
    return chunks.size();
  };
  for (std::size_t i = 1; i < a.test.size(); ++i) CHECK(pos(a.test[i - 1].id) < pos(a.test[i].id));

  spec.seed = 43;
  CHECK(sample_and_split(chunks, spec).test != a.test);
  spec.test_count = 26;
  CHECK_THROWS_AS(sample_and_split(chunks, spec), PreconditionError);
  SplitSpec frac;
  frac.test_fraction = 0.2;
  CHECK(sample_and_split(chunks, frac).test.size() == 20);
  SplitSpec both = frac;
  both.test_count = 1;
  CHECK_THROWS_AS(sample_and_split(chunks, both), PreconditionError);
}

TEST_CASE("split rng: below is in range and the stream is pinned") {
  SplitRng r(42);
  std::mt19937_64 ref(42);
  CHECK(r.next() == ref());
  SplitRng s(1);
  for (int i = 0; i < 1000; ++i) CHECK(s.below(7) < 7);
  CHECK_THROWS_AS(s.below(0), PreconditionError);
}
