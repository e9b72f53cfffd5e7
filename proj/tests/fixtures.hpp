#pragma once

// Synthetic corpus material shared by unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "leveltext/level_lexicon.hpp"
#include "leveltext/utf8.hpp"

namespace fixtures {

inline const std::vector<std::string>& english_words() {
  static const std::vector<std::string> w = {
      "the", "river", "town", "people", "market", "built", "a", "bridge", "over", "old",
      "road", "many", "years", "later", "school", "opened", "near", "church", "and", "farm",
      "trade", "grew", "during", "century", "local", "council", "decided", "to", "expand", "port"};
  return w;
}

inline std::string sentence(std::mt19937_64& rng, std::size_t words) {
  const auto& w = english_words();
  std::string s;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) s += ' ';
    std::string word = w[rng() % w.size()];
    if (i == 0) word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
    s += word;
  }
  return s + ".";
}

inline std::string paragraph(std::mt19937_64& rng, std::size_t sentences, std::size_t min_words,
                             std::size_t max_words) {
  std::string p;
  for (std::size_t i = 0; i < sentences; ++i) {
    if (i) p += ' ';
    p += sentence(rng, min_words + rng() % (max_words - min_words + 1));
  }
  return p;
}

// Article with a title line, body paragraphs of mixed size, the occasional
// short paragraph, oversized paragraph, single giant sentence, and a trailing
// reference section.
inline std::string article(std::mt19937_64& rng, std::size_t index) {
  std::vector<std::string> paras;
  paras.push_back("Article " + std::to_string(index));
  std::size_t body = 2 + rng() % 8;
  for (std::size_t i = 0; i < body; ++i) {
    auto kind = rng() % 10;
    if (kind == 0) {
      paras.push_back(sentence(rng, 4));  // too short, dropped
    } else if (kind == 1) {
      paras.push_back(paragraph(rng, 60 + rng() % 40, 8, 14));  // > 512 tokens
    } else if (kind == 2 && index % 7 == 0) {
      paras.push_back(sentence(rng, 700));  // one sentence > 512 tokens
    } else {
      paras.push_back(paragraph(rng, 2 + rng() % 12, 5, 16));
    }
  }
  if (rng() % 2) {
    paras.push_back("References\n" + paragraph(rng, 3, 6, 10));
  } else if (rng() % 2) {
    paras.push_back("== See also ==\n" + paragraph(rng, 3, 6, 10));
  }
  std::string out;
  for (std::size_t i = 0; i < paras.size(); ++i) {
    if (i) out += (rng() % 3 == 0) ? "\n\n\n" : "\n\n";
    out += paras[i];
  }
  return out;
}

inline std::string collapse_ws(std::string_view s) {
  return leveltext::utf8::join(leveltext::utf8::split_whitespace(s), " ");
}

}  // namespace fixtures
