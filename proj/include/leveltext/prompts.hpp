#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "leveltext/level_lexicon.hpp"

namespace leveltext {

// Text with `{name}` placeholders. Substitution is single-pass, so values
// containing braces are inserted verbatim.
class PromptTemplate {
 public:
  explicit PromptTemplate(std::string text) : text_(std::move(text)) {}
  static PromptTemplate load(const std::filesystem::path& path);

  const std::string& text() const { return text_; }
  // Throws if a placeholder in the template has no value.
  std::string render(const std::map<std::string, std::string>& vars) const;
  // Inverse of render for prompts produced from this template.
  std::optional<std::map<std::string, std::string>> match(std::string_view rendered) const;

 private:
  std::string text_;
};

const PromptTemplate& simplify_template();
const PromptTemplate& judge_template();

std::string render_simplify_prompt(Language lang, int level, std::string_view original,
                                   const PromptTemplate& tmpl = simplify_template());
std::string render_judge_prompt(Language lang, std::string_view original,
                                std::string_view simplified,
                                const PromptTemplate& tmpl = judge_template());

struct SimplifyRequest {
  Language language;
  int level;
  std::string original;
};

struct JudgeRequest {
  Language language;
  std::string original;
  std::string simplified;
};

std::optional<SimplifyRequest> parse_simplify_prompt(std::string_view prompt);
std::optional<JudgeRequest> parse_judge_prompt(std::string_view prompt);

}  // namespace leveltext
