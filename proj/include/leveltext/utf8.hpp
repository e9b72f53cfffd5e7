#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace leveltext::utf8 {

// Decodes UTF-8; invalid bytes decode to U+FFFD and consume one byte.
std::u32string decode(std::string_view s);
std::string encode(char32_t cp);
std::string encode(std::u32string_view s);

// Splits into one string per code point.
std::vector<std::string> code_points(std::string_view s);
std::size_t length(std::string_view s);

bool is_space(char32_t cp);
bool is_han(char32_t cp);
bool is_kana(char32_t cp);
bool is_hangul(char32_t cp);
// Han or kana; the scripts written without inter-word spaces.
bool is_cjk(char32_t cp);
bool is_punct(char32_t cp);
bool is_digit(char32_t cp);
bool is_ascii_alpha(char32_t cp);
bool is_sentence_terminal(char32_t cp);

std::string to_lower_ascii(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace leveltext::utf8
