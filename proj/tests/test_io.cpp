#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qphase/io.hpp"

using namespace qphase;

TEST_CASE("format_double uses 12 significant digits") {
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(0.159154943091895) == "0.159154943092");
  CHECK(io::format_double(1e-12) == "1e-12");
  CHECK(io::format_double(-3.0) == "-3");
}

TEST_CASE("kind names round trip") {
  CHECK(io::kind_name(OpKind::Add) == "add");
  CHECK(io::kind_name(OpKind::Subtract) == "subtract");
  CHECK(io::kind_from_name("add") == OpKind::Add);
  CHECK(io::kind_from_name("subtract") == OpKind::Subtract);
  CHECK_THROWS_AS(io::kind_from_name("other"), InvalidSpecError);
}

TEST_CASE("spec JSON round trip") {
  const StateSpec spec{OpKind::Subtract, 2, 1, 1.25, 0.75};
  const nlohmann::json j = io::spec_to_json(spec);
  const StateSpec back = io::spec_from_json(j);
  CHECK(back.kind == spec.kind);
  CHECK(back.count == spec.count);
  CHECK(back.fock_n == spec.fock_n);
  CHECK(back.alpha_mag == spec.alpha_mag);
  CHECK(back.alpha_phase == spec.alpha_phase);
}

TEST_CASE("CSV output carries a hash-prefixed JSON header and LF endings") {
  io::Table table;
  table.header = {{"quantity", "demo"}};
  table.columns = {"x", "y"};
  table.rows = {{"1", "2"}, {"3", "4"}};
  const std::string csv = io::to_csv(table);

  REQUIRE(csv.substr(0, 2) == "# ");
  const std::size_t eol = csv.find('\n');
  REQUIRE(eol != std::string::npos);
  const nlohmann::json header = nlohmann::json::parse(csv.substr(2, eol - 2));
  CHECK(header.at("quantity") == "demo");

  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.substr(eol + 1) == "x,y\n1,2\n3,4\n");
}

TEST_CASE("JSON output parses and mirrors the table") {
  io::Table table;
  table.header = {{"quantity", "demo"}};
  table.columns = {"x"};
  table.rows = {{"7"}};
  const nlohmann::json j = nlohmann::json::parse(io::to_json(table));
  CHECK(j.at("header").at("quantity") == "demo");
  CHECK(j.at("columns").at(0) == "x");
  CHECK(j.at("rows").at(0).at(0) == "7");
}
