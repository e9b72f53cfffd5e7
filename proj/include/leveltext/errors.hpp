#pragma once

#include <stdexcept>
#include <string>

namespace leveltext {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; message carries the source and line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyLexiconError : public Error {
 public:
  using Error::Error;
};

class UnknownLevelError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Transient backend failure (timeout, transport, 5xx). Retried by callers.
class RetryableError : public Error {
 public:
  using Error::Error;
};

// Judge output that is not an integer in 0..100 after all re-prompts.
class JudgeParseError : public Error {
 public:
  JudgeParseError(const std::string& raw)
      : Error("judge output is not an integer in 0..100: \"" + raw + "\""), raw_(raw) {}
  const std::string& raw_output() const { return raw_; }

 private:
  std::string raw_;
};

}  // namespace leveltext
