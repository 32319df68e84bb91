#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "hyper/table_io.hpp"

using namespace hyper;

namespace {

ParseErrorKind parse_failure(const std::string& text) {
  try {
    (void)parse_table(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("parse unexpectedly succeeded");
  return ParseErrorKind::malformed_line;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    out.push_back(l);
  }
  return out;
}

}  // namespace

TEST_CASE("parse the chain-reaction fixture") {
  const HyperOp op = fixtures::ab_table();
  CHECK(op.universe().symbols() ==
        std::vector<std::string>{"Ao", "Bo", "A2", "B2", "AB"});
  CHECK(op.cell(0, 1) == SubsetMask{0, 1, 4});
}

TEST_CASE("order-1 document") {
  const HyperOp op = parse_table("elements: e\ne e = e\n");
  CHECK(op.order() == 1);
  CHECK(classify(op).class_label == ClassLabel::hypergroup);
}

TEST_CASE("serialize emits the canonical form") {
  const std::string text = serialize_table(fixtures::ab_table());
  const auto ls = lines(text);
  REQUIRE(ls.size() == 26);
  CHECK(ls[0] == "elements: Ao Bo A2 B2 AB");
  CHECK(ls[1] == "Ao Ao = Ao A2");
  // printed as "Ao, B2, Bo, AB"; members come out in universe order
  CHECK(ls[4] == "Ao B2 = Ao Bo B2 AB");
  CHECK(ls[25] == "AB AB = Ao Bo A2 B2 AB");
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("shuffled, commented, CRLF input normalizes") {
  auto ls = lines(serialize_table(fixtures::ab_table()));
  std::vector<std::string> cells(ls.begin() + 1, ls.end());
  std::reverse(cells.begin(), cells.end());
  std::string text = "# header\r\n\r\n" + ls[0] + "\r\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i == 7) {
      text += "  # comment between cells\r\n";
    }
    text += cells[i] + "\r\n";
  }
  const HyperOp op = parse_table(text);
  CHECK(op == fixtures::ab_table());
  CHECK(serialize_table(op) == serialize_table(fixtures::ab_table()));
}

TEST_CASE("duplicate members in a cell collapse") {
  const HyperOp op = parse_table("elements: a b\na a = a a b a\na b = b\n"
                                 "b a = a\nb b = b b\n");
  CHECK(op.cell(0, 0) == SubsetMask{0, 1});
  CHECK(serialize_table(op).find("a a = a b\n") != std::string::npos);
}

TEST_CASE("diagnostics") {
  const std::string header = "elements: a b\n";
  const std::string body = "a a = a\na b = b\nb a = a\n";

  try {
    (void)parse_table("elements: A2 B2\nA2 A2 = A2\nA2 B2 = B2\nB2 A2 = A2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::missing_cell);
    CHECK(std::string(e.what()) == "missing cell (B2, B2)");
  }

  try {
    (void)parse_table(header + body + "b c = a\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::unknown_symbol);
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("line 5") == 0);
  }

  CHECK(parse_failure(header + body + "b b = x\n") ==
        ParseErrorKind::unknown_symbol);
  CHECK(parse_failure(header + body + "a a = b\nb b = b\n") ==
        ParseErrorKind::duplicate_cell);
  CHECK(parse_failure(header + body + "b b =\n") == ParseErrorKind::empty_cell);
  CHECK(parse_failure("elements: a a\n") == ParseErrorKind::duplicate_element);
  CHECK(parse_failure("elements: a b=\n") == ParseErrorKind::invalid_symbol);
  CHECK(parse_failure("elements: a\nelements: a\n") ==
        ParseErrorKind::duplicate_elements_line);
  CHECK(parse_failure("elements: a\na = a\n") ==
        ParseErrorKind::malformed_line);
  CHECK(parse_failure("elements: a\na a a\n") ==
        ParseErrorKind::malformed_line);
  CHECK(parse_failure("a a = a\n") == ParseErrorKind::missing_elements);
  CHECK(parse_failure("# nothing\n") == ParseErrorKind::missing_elements);
  CHECK(parse_failure("elements:\n") == ParseErrorKind::malformed_line);
  CHECK(parse_failure("elements: a°\n") == ParseErrorKind::invalid_symbol);
}
