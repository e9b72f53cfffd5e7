#include "leveltext/segment.hpp"

#include "leveltext/utf8.hpp"

namespace leveltext {

namespace {

bool is_closer(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x201D || cp == 0x2019 ||
         cp == 0x300D || cp == 0x300F || cp == 0xFF09 || cp == 0x3011;
}

bool is_wide_terminal(char32_t cp) { return cp == 0x3002 || cp == 0xFF01 || cp == 0xFF1F; }

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<std::string> out;
  std::u32string cur;
  auto flush = [&] {
    std::string s = utf8::trim(utf8::encode(cur));
    if (!s.empty()) out.push_back(std::move(s));
    cur.clear();
  };
  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    if (cp == '\n' && i + 1 < cps.size() && cps[i + 1] == '\n') {
      flush();
      while (i < cps.size() && utf8::is_space(cps[i])) ++i;
      continue;
    }
    cur.push_back(cp);
    ++i;
    if (!utf8::is_sentence_terminal(cp)) continue;
    while (i < cps.size() && (utf8::is_sentence_terminal(cps[i]) || is_closer(cps[i]))) {
      cur.push_back(cps[i]);
      ++i;
    }
    if (i == cps.size() || utf8::is_space(cps[i]) || is_wide_terminal(cp)) flush();
  }
  flush();
  return out;
}

}  // namespace leveltext
