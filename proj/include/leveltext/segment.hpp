#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace leveltext {

// Rule-based sentence splitter shared by the mock analyzer and the corpus
// pipeline. A sentence ends at . ! ? (or their full-width forms) plus any
// closing quotes/brackets, when followed by whitespace or end of text; the
// ideographic full stop ends a sentence unconditionally. Blank lines are
// also boundaries. Returned sentences are trimmed and nonempty.
std::vector<std::string> split_sentences(std::string_view text);

}  // namespace leveltext
