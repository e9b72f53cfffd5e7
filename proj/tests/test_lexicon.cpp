#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "leveltext/level_lexicon.hpp"
#include "test_support.hpp"

using namespace leveltext;

TEST_CASE("scales have the expected label counts and orders") {
  CHECK(LevelScale::cefr().size() == 6);
  CHECK(LevelScale::jlpt().size() == 5);
  CHECK(LevelScale::topik().size() == 6);
  CHECK(LevelScale::hsk().size() == 7);
  CHECK(LevelScale::cefr().ordinal("A1") == 0);
  CHECK(LevelScale::cefr().ordinal("C2") == 5);
  // N5 easiest
  CHECK(LevelScale::jlpt().ordinal("N5") == 0);
  CHECK(LevelScale::jlpt().ordinal("N1") == 4);
  CHECK(LevelScale::topik().ordinal("TOPIK3") == 2);
  CHECK(LevelScale::hsk().ordinal("HSK7-9") == 6);
  for (auto alias : {"HSK7", "HSK8", "HSK9"}) CHECK(LevelScale::hsk().ordinal(alias) == 6);
  CHECK(LevelScale::hsk().label(6) == "HSK7-9");
  CHECK(LevelScale::jlpt().display_name(1) == "JLPT N4");
}

TEST_CASE("unknown label lists the valid ones") {
  try {
    LevelScale::cefr().ordinal("D1");
    FAIL("expected throw");
  } catch (const UnknownLevelError& e) {
    std::string msg = e.what();
    CHECK(msg.find("A1") != std::string::npos);
    CHECK(msg.find("C2") != std::string::npos);
  }
  CHECK_THROWS_AS(LevelScale::cefr().label(6), UnknownLevelError);
  CHECK_THROWS_AS(LevelScale::cefr().label(-1), UnknownLevelError);
}

TEST_CASE("UNKNOWN orders above every ordinal") {
  for (int i = 0; i < 10; ++i) CHECK(Level::of(i) < Level::unknown());
  CHECK(Level::of(0) < Level::of(1));
}

TEST_CASE("english lemmas are case folded, others kept") {
  CHECK(normalize_lemma(Language::en, "  Look   After ") == "look after");
  CHECK(normalize_lemma(Language::ja, " 食べる ") == "食べる");
}

TEST_CASE("parse_lexicon collapses duplicates to the easiest level") {
  std::istringstream in("lemma\tlevel\nRun\tB1\nrun\tA2\nwalk\tA1\nwalk\tC1\n\n");
  auto lex = parse_lexicon(in, LevelScale::cefr());
  CHECK(lex.size() == 2);
  CHECK(lex.lookup("run") == Level::of(1));
  CHECK(lex.lookup("walk") == Level::of(0));
  CHECK(lex.lookup("fly").is_unknown());
}

TEST_CASE("parse_lexicon reports malformed rows with line numbers") {
  std::istringstream bad_level("lemma\tlevel\nok\tA1\nbad\tZ9\n");
  try {
    parse_lexicon(bad_level, LevelScale::cefr(), "t.tsv");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream cols("lemma\tlevel\nx\tA1\textra\n");
  CHECK_THROWS_AS(parse_lexicon(cols, LevelScale::cefr()), ParseError);
  std::istringstream no_header("x\tA1\n");
  CHECK_THROWS_AS(parse_lexicon(no_header, LevelScale::cefr()), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_lexicon(empty, LevelScale::cefr()), EmptyLexiconError);
  std::istringstream header_only("lemma\tlevel\n");
  CHECK_THROWS_AS(parse_lexicon(header_only, LevelScale::cefr()), EmptyLexiconError);
}

TEST_CASE("HSK aliases parse to the merged band") {
  std::istringstream in("lemma\tlevel\n议\tHSK8\n");
  auto lex = parse_lexicon(in, LevelScale::hsk());
  CHECK(lex.lookup("议") == Level::of(6));
}

TEST_CASE("phrase index is ordered by token count, length, then text") {
  LevelLexicon lex(LevelScale::cefr(), {{"look after", 1},
                                        {"look up to", 2},
                                        {"give up", 1},
                                        {"put up with", 3},
                                        {"cat", 0}});
  const auto& p = lex.phrase_index();
  REQUIRE(p.size() == 4);
  CHECK(p[0].lemma == "put up with");
  CHECK(p[1].lemma == "look up to");
  CHECK(p[2].lemma == "look after");
  CHECK(p[3].lemma == "give up");
  CHECK(lex.max_phrase_tokens() == 3);
  CHECK(lex.phrases_starting_with("look").size() == 2);
  CHECK(lex.phrases_starting_with("cat").empty());
}

TEST_CASE("property: duplicate collapse equals a brute-force minimum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::ostringstream file;
    file << "lemma\tlevel\n";
    std::map<std::string, int> oracle;
    int rows = 1 + static_cast<int>(rng() % 60);
    for (int r = 0; r < rows; ++r) {
      std::string w = "w" + std::to_string(rng() % 15);
      int lvl = static_cast<int>(rng() % 6);
      file << w << '\t' << LevelScale::cefr().label(lvl) << '\n';
      auto [it, ins] = oracle.emplace(w, lvl);
      if (!ins) it->second = std::min(it->second, lvl);
    }
    std::istringstream in(file.str());
    auto lex = parse_lexicon(in, LevelScale::cefr());
    REQUIRE(lex.size() == oracle.size());
    for (const auto& [w, lvl] : oracle) CHECK(lex.lookup(w) == Level::of(lvl));
  }
}

TEST_CASE("shipped lexicons load for all four languages") {
  auto b = testsupport::bundle();
  for (Language l : kAllLanguages) {
    CHECK(b->has(l));
    CHECK(b->at(l).lexicon.size() > 100);
    CHECK(!b->at(l).stopwords.empty());
  }
}
