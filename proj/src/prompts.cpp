#include "leveltext/prompts.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "leveltext/errors.hpp"

namespace leveltext {

namespace {

constexpr const char* kSimplifyTemplate = R"PROMPT(You are a careful rewrite assistant.
Rewrite the <TEXT> in {language} so that every word, except proper nouns or proper adjectives, is at or below the {level} vocabulary level.
Replace or simplify any other words above {level} level with easier alternatives while preserving the original meaning and coherence.
Do not skip, shorten, or omit any part of the text. Keep sentence count and structure.
Output only the fully converted text with no explanations, instructions, or extra words.

<TEXT>
{original_text}
)PROMPT";

constexpr const char* kJudgeTemplate = R"PROMPT(You are evaluating {language} text quality for a text simplification system.

Given [ORIGINAL_TEXT] and [SIMPLIFIED_TEXT], focus ONLY on how natural and fluent the [SIMPLIFIED_TEXT] reads as a rewrite of the [ORIGINAL_TEXT]. Rate the NATURALNESS of the [SIMPLIFIED_TEXT] as if it were written by a native speaker, strictly according to the following rules:

100 = indistinguishable from a native human-written well-edited text
80-99 = highly natural with only minor unnatural phrasing
60-79 = generally understandable but contains multiple awkward and unnatural expressions
30-59 = sounds clearly machine-generated, frequently unnatural or repetitive
0-29 = extremely incoherent or clearly broken language

Critical penalties:
- Strongly penalize repetitive template phrasing (e.g., repeating the same word/phrase many times to fill text).
- Strongly penalize awkward connective phrases or unnatural sentence patterns.
- Do NOT reward being 'simple' if it becomes unnatural. Simple but fully natural text should still receive a high score.

Use the full 0–100 range. Reflect even small differences in naturalness with 1-point precision.
Output only a single integer from 0 to 100, and say nothing else.

[ORIGINAL_TEXT]
{original_text}

[SIMPLIFIED_TEXT]
{simplified_text}
)PROMPT";

struct Segment {
  bool placeholder;
  std::string text;
};

std::vector<Segment> segments_of(const std::string& tmpl) {
  std::vector<Segment> out;
  std::string lit;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      auto close = tmpl.find('}', i + 1);
      if (close != std::string::npos) {
        std::string name = tmpl.substr(i + 1, close - i - 1);
        bool ident = !name.empty();
        for (char c : name) {
          if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) ident = false;
        }
        if (ident) {
          out.push_back({false, std::move(lit)});
          lit.clear();
          out.push_back({true, std::move(name)});
          i = close + 1;
          continue;
        }
      }
    }
    lit.push_back(tmpl[i]);
    ++i;
  }
  out.push_back({false, std::move(lit)});
  return out;
}

std::optional<Language> language_from_name(std::string_view name) {
  for (Language lang : kAllLanguages) {
    if (language_name(lang) == name) return lang;
  }
  return std::nullopt;
}

}  // namespace

PromptTemplate PromptTemplate::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open prompt template " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return PromptTemplate(ss.str());
}

std::string PromptTemplate::render(const std::map<std::string, std::string>& vars) const {
  std::string out;
  for (const auto& seg : segments_of(text_)) {
    if (!seg.placeholder) {
      out += seg.text;
      continue;
    }
    auto it = vars.find(seg.text);
    if (it == vars.end()) throw Error("prompt placeholder {" + seg.text + "} has no value");
    out += it->second;
  }
  return out;
}

std::optional<std::map<std::string, std::string>> PromptTemplate::match(
    std::string_view rendered) const {
  auto segs = segments_of(text_);
  std::map<std::string, std::string> vars;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& seg = segs[i];
    if (!seg.placeholder) {
      if (rendered.substr(pos, seg.text.size()) != seg.text) return std::nullopt;
      pos += seg.text.size();
      continue;
    }
    // Literal following this placeholder; the last placeholder is anchored to
    // the end of the prompt.
    const std::string& next = segs[i + 1].text;
    std::size_t end;
    if (i + 2 == segs.size()) {
      if (rendered.size() < pos + next.size()) return std::nullopt;
      end = rendered.size() - next.size();
    } else {
      end = next.empty() ? pos : rendered.find(next, pos);
      if (end == std::string_view::npos) return std::nullopt;
    }
    std::string value(rendered.substr(pos, end - pos));
    auto [it, inserted] = vars.emplace(seg.text, value);
    if (!inserted && it->second != value) return std::nullopt;
    pos = end;
  }
  if (pos != rendered.size()) return std::nullopt;
  return vars;
}

const PromptTemplate& simplify_template() {
  static const PromptTemplate t(kSimplifyTemplate);
  return t;
}

const PromptTemplate& judge_template() {
  static const PromptTemplate t(kJudgeTemplate);
  return t;
}

std::string render_simplify_prompt(Language lang, int level, std::string_view original,
                                   const PromptTemplate& tmpl) {
  const auto& scale = LevelScale::for_language(lang);
  return tmpl.render({{"language", std::string(language_name(lang))},
                      {"level", scale.display_name(level)},
                      {"original_text", std::string(original)}});
}

std::string render_judge_prompt(Language lang, std::string_view original,
                                std::string_view simplified, const PromptTemplate& tmpl) {
  return tmpl.render({{"language", std::string(language_name(lang))},
                      {"original_text", std::string(original)},
                      {"simplified_text", std::string(simplified)}});
}

std::optional<SimplifyRequest> parse_simplify_prompt(std::string_view prompt) {
  auto vars = simplify_template().match(prompt);
  if (!vars) return std::nullopt;
  auto lang = language_from_name(vars->at("language"));
  if (!lang) return std::nullopt;
  const auto& scale = LevelScale::for_language(*lang);
  for (std::size_t i = 0; i < scale.size(); ++i) {
    if (scale.display_name(static_cast<int>(i)) == vars->at("level")) {
      return SimplifyRequest{*lang, static_cast<int>(i), vars->at("original_text")};
    }
  }
  return std::nullopt;
}

std::optional<JudgeRequest> parse_judge_prompt(std::string_view prompt) {
  auto vars = judge_template().match(prompt);
  if (!vars) return std::nullopt;
  auto lang = language_from_name(vars->at("language"));
  if (!lang) return std::nullopt;
  return JudgeRequest{*lang, vars->at("original_text"), vars->at("simplified_text")};
}

}  // namespace leveltext
