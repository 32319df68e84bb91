#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hyper/error.hpp"
#include "hyper/hyperop.hpp"

namespace hyper {

// .hop documents:
//
//   # comment lines anywhere
//   elements: Ao Bo A2 B2 AB
//   Ao Ao = Ao A2
//   ...                       (one line per ordered pair, any order)
//
// Blank lines are ignored. LF and CRLF are accepted; LF is emitted.

enum class ParseErrorKind {
  malformed_line,
  missing_elements,
  duplicate_elements_line,
  duplicate_element,
  invalid_symbol,
  unknown_symbol,
  duplicate_cell,
  empty_cell,
  missing_cell,
};

class ParseError : public UsageError {
 public:
  // line is 1-based; 0 when the error is not tied to a line.
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

HyperOp parse_table(std::string_view text);

// Canonical form: elements line, then row-major cell lines with members in
// universe order.
std::string serialize_table(const HyperOp& op);

}  // namespace hyper
