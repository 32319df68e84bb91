#include "hyper/table_io.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace hyper {

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& what)
    : UsageError(line == 0 ? what
                           : "line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
      ++i;
    }
    if (i > start) {
      words.push_back(s.substr(start, i - start));
    }
  }
  return words;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

constexpr std::string_view kElementsKey = "elements:";

class Parser {
 public:
  HyperOp run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      ++line_no;
      handle(trim(line), line_no);
      pos = end + 1;
    }
    return finish();
  }

 private:
  void handle(std::string_view line, std::size_t line_no) {
    if (line.empty() || line.front() == '#') {
      return;
    }
    if (line.starts_with(kElementsKey)) {
      read_elements(line.substr(kElementsKey.size()), line_no);
      return;
    }
    read_cell(line, line_no);
  }

  void read_elements(std::string_view rest, std::size_t line_no) {
    if (universe_) {
      throw ParseError(ParseErrorKind::duplicate_elements_line, line_no,
                       "second 'elements:' line");
    }
    std::vector<std::string> symbols;
    for (std::string_view w : split_words(rest)) {
      if (!is_valid_symbol(w)) {
        throw ParseError(ParseErrorKind::invalid_symbol, line_no,
                         "invalid element symbol '" + std::string(w) + "'");
      }
      for (const auto& s : symbols) {
        if (s == w) {
          throw ParseError(ParseErrorKind::duplicate_element, line_no,
                           "duplicate element '" + std::string(w) + "'");
        }
      }
      symbols.emplace_back(w);
    }
    if (symbols.empty()) {
      throw ParseError(ParseErrorKind::malformed_line, line_no,
                       "'elements:' line lists no elements");
    }
    if (symbols.size() > kMaxOrder) {
      throw ParseError(ParseErrorKind::malformed_line, line_no,
                       "more than 64 elements");
    }
    universe_.emplace(std::move(symbols));
    const std::size_t n = universe_->size();
    cells_.assign(n * n, SubsetMask{});
    seen_.assign(n * n, false);
  }

  Element lookup(std::string_view symbol, std::size_t line_no) const {
    if (auto e = universe_->find(symbol)) {
      return *e;
    }
    throw ParseError(ParseErrorKind::unknown_symbol, line_no,
                     "unknown symbol '" + std::string(symbol) + "'");
  }

  void read_cell(std::string_view line, std::size_t line_no) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(ParseErrorKind::malformed_line, line_no,
                       "expected 'X Y = Z ...' or 'elements: ...'");
    }
    if (!universe_) {
      throw ParseError(ParseErrorKind::missing_elements, line_no,
                       "cell line before the 'elements:' line");
    }
    const auto pair = split_words(line.substr(0, eq));
    if (pair.size() != 2) {
      throw ParseError(ParseErrorKind::malformed_line, line_no,
                       "left of '=' must name exactly two elements");
    }
    const Element x = lookup(pair[0], line_no);
    const Element y = lookup(pair[1], line_no);
    const std::size_t n = universe_->size();
    if (seen_[x * n + y]) {
      throw ParseError(ParseErrorKind::duplicate_cell, line_no,
                       "duplicate cell (" + std::string(pair[0]) + ", " +
                           std::string(pair[1]) + ")");
    }
    SubsetMask product;
    for (std::string_view w : split_words(line.substr(eq + 1))) {
      product |= SubsetMask::singleton(lookup(w, line_no));
    }
    if (product.empty()) {
      throw ParseError(ParseErrorKind::empty_cell, line_no,
                       "empty cell (" + std::string(pair[0]) + ", " +
                           std::string(pair[1]) + ")");
    }
    seen_[x * n + y] = true;
    cells_[x * n + y] = product;
  }

  HyperOp finish() {
    if (!universe_) {
      throw ParseError(ParseErrorKind::missing_elements, 0,
                       "no 'elements:' line");
    }
    const std::size_t n = universe_->size();
    for (std::size_t c = 0; c < n * n; ++c) {
      if (!seen_[c]) {
        throw ParseError(ParseErrorKind::missing_cell, 0,
                         "missing cell (" + universe_->symbol(c / n) + ", " +
                             universe_->symbol(c % n) + ")");
      }
    }
    return HyperOp(std::move(*universe_), std::move(cells_));
  }

  std::optional<Universe> universe_;
  std::vector<SubsetMask> cells_;
  std::vector<bool> seen_;
};

}  // namespace

HyperOp parse_table(std::string_view text) { return Parser{}.run(text); }

std::string serialize_table(const HyperOp& op) {
  const Universe& u = op.universe();
  std::ostringstream out;
  out << "elements:";
  for (const auto& s : u.symbols()) {
    out << ' ' << s;
  }
  out << '\n';
  for (Element x = 0; x < op.order(); ++x) {
    for (Element y = 0; y < op.order(); ++y) {
      out << u.symbol(x) << ' ' << u.symbol(y) << " =";
      for (Element e : op.cell(x, y)) {
        out << ' ' << u.symbol(e);
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace hyper
