#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swkg {

// Positioned syntax error shared by every text format in the toolkit
// (Turtle, axioms, rules, queries, rename maps).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::string token = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string token_;
};

}  // namespace swkg
