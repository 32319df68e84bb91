#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "hyper/cli.hpp"
#include "hyper/table_io.hpp"

using namespace hyper;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run hop(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool machine_clean(const std::string& text) {
  static const std::regex line(R"(^[a-z_]+(\.[A-Za-z0-9_]+)*=[^\n]*$)");
  std::istringstream in(text);
  std::size_t count = 0;
  for (std::string l; std::getline(in, l); ++count) {
    if (!std::regex_match(l, line)) {
      MESSAGE("bad machine line: " << l);
      return false;
    }
  }
  return count > 0;
}

const std::string kAB = fixtures::path("ab_table.hop");
const std::string kHi = fixtures::path("hi_table.hop");
const std::string kPrinted = fixtures::path("hi_table_printed.hop");

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hop_test_" + name);
}

}  // namespace

TEST_CASE("check") {
  Run r = hop({"check", kAB});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("class: hypergroup") != std::string::npos);

  r = hop({"--machine", "check", kAB});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("class=hypergroup\nhv_group=true\n") == 0);
  CHECK(machine_clean(r.out));

  r = hop({"check", kPrinted, "--machine"});
  CHECK(r.code == cli::kNotHvGroup);
  CHECK(r.out.find("class=hypergroupoid") != std::string::npos);
}

TEST_CASE("classify prints witnesses and always succeeds") {
  Run r = hop({"--machine", "classify", kPrinted});
  CHECK(r.code == cli::kOk);
  CHECK(machine_clean(r.out));
  CHECK(r.out.find("reproduction.witness=Io\n") != std::string::npos);
  CHECK(r.out.find("associative.witness.x=Ho\n") != std::string::npos);
  CHECK(r.out.find("associative.witness.z=Io\n") != std::string::npos);
  CHECK(r.out.find("associative.witness.left={Ho, Io, I2, HI}\n") !=
        std::string::npos);
  CHECK(r.out.find("commutative.witness.y=H2\n") != std::string::npos);

  // Exit codes depend on the verdict only.
  CHECK(hop({"classify", kPrinted}).code == cli::kOk);
  CHECK(hop({"--workers", "4", "--machine", "classify", kPrinted}).out ==
        r.out);
}

TEST_CASE("subs") {
  Run r = hop({"subs", kAB});
  CHECK(r.code == cli::kOk);
  CHECK(r.out ==
        "{Ao, A2}  proper  hypergroup\n"
        "{Bo, B2}  proper  hypergroup\n"
        "{Ao, Bo, A2, B2, AB}  trivial  hypergroup\n");

  r = hop({"--machine", "subs", kAB});
  CHECK(machine_clean(r.out));
  CHECK(r.out.find("substructures=3\n") == 0);
  CHECK(r.out.find("substructure.1={Bo, B2}\n") != std::string::npos);
  CHECK(r.out.find("substructure.2.trivial=true\n") != std::string::npos);
}

TEST_CASE("iso") {
  const auto ab = temp_file("gen_AB.hop");
  const auto hi = temp_file("gen_HI.hop");
  REQUIRE(hop({"gen", "--kinds", "A", "B", "-o", ab.string()}).code == 0);
  REQUIRE(hop({"gen", "--halogen", "I", "-o", hi.string()}).code == 0);

  Run r = hop({"iso", ab.string(), hi.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "Ao -> Ho\nBo -> Io\nA2 -> H2\nB2 -> I2\nAB -> HI\n");

  r = hop({"--machine", "iso", ab.string(), hi.string()});
  CHECK(machine_clean(r.out));
  CHECK(r.out.find("map.AB=HI") != std::string::npos);

  r = hop({"iso", kAB, kPrinted});
  CHECK(r.code == cli::kNotIsomorphic);
  CHECK(r.out == "not isomorphic\n");
  r = hop({"--machine", "iso", kAB, kPrinted});
  CHECK(r.code == cli::kNotIsomorphic);
  CHECK(r.out == "isomorphic=false\n");

  std::filesystem::remove(ab);
  std::filesystem::remove(hi);
}

TEST_CASE("gen") {
  Run r = hop({"gen", "--kinds", "A", "B"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == serialize_table(fixtures::ab_table()));

  r = hop({"gen", "--halogen", "i"});
  CHECK(parse_table(r.out) == fixtures::hi_table());

  r = hop({"--machine", "gen", "--halogen", "Cl"});
  CHECK(machine_clean(r.out));
  CHECK(r.out.find("elements=Ho Clo H2 Cl2 HCl\n") == 0);
  CHECK(r.out.find("cell.Clo.Clo=Clo Cl2\n") != std::string::npos);

  CHECK(hop({"gen", "--halogen", "Xe"}).code == cli::kUsageError);
  CHECK(hop({"gen"}).code == cli::kUsageError);
  CHECK(hop({"gen", "--kinds", "A", "A"}).code == cli::kUsageError);
  CHECK(hop({"gen", "--kinds", "A", "B", "--halogen", "I"}).code ==
        cli::kUsageError);
  CHECK(hop({"gen", "--halogen", "I", "-o", "/nonexistent/dir/x.hop"}).code ==
        cli::kIoError);
}

TEST_CASE("census") {
  Run r = hop({"--machine", "census", "--order", "2", "--dedup"});
  CHECK(r.code == cli::kOk);
  CHECK(machine_clean(r.out));
  CHECK(r.out.find("total_tables=81\n") != std::string::npos);
  CHECK(r.out.find("count.hypergroup=14\n") != std::string::npos);
  CHECK(r.out.find("isomorphism_classes=45\n") != std::string::npos);
  CHECK(r.out.find("class_count.hypergroup=8\n") != std::string::npos);

  r = hop({"census", "--order", "5", "--sample", "200", "--workers", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("mode: sample") != std::string::npos);
  CHECK(r.out.find("scanned: 200") != std::string::npos);

  r = hop({"census", "--order", "4"});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("refusing to enumerate all 6568408355712890625") !=
        std::string::npos);
}

TEST_CASE("errors map to exit codes") {
  CHECK(hop({}).code == cli::kUsageError);
  CHECK(hop({"frobnicate"}).code == cli::kUsageError);
  CHECK(hop({"check"}).code == cli::kUsageError);
  CHECK(hop({"--help"}).code == cli::kOk);

  Run r = hop({"check", "/nonexistent/table.hop"});
  CHECK(r.code == cli::kIoError);
  CHECK(r.err.find("cannot open") != std::string::npos);

  const auto bad = temp_file("bad.hop");
  {
    std::ofstream f(bad);
    f << "elements: a b\na a = a\n";
  }
  r = hop({"check", bad.string()});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("missing cell (a, b)") != std::string::npos);
  CHECK(r.out.empty());
  std::filesystem::remove(bad);
}
