#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ssr/io.hpp"
#include "ssr/report.hpp"
#include "ssr/solution.hpp"

using namespace ssr;

namespace {

ParseError capture(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError");
  return ParseError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("parse normalizes and records positions") {
  Instance inst = parse_instance("30 10 20\n");
  REQUIRE(inst.size() == 3);
  CHECK(inst.values() == std::vector<std::int64_t>{10, 20, 30});
  CHECK(inst.position(0) == 1);
  CHECK(inst.position(1) == 2);
  CHECK(inst.position(2) == 0);
}

TEST_CASE("comments and mixed whitespace") {
  Instance inst = parse_instance("# header\n3\t5 # trailing note\n\n  7\n");
  CHECK(inst.values() == std::vector<std::int64_t>{3, 5, 7});
  // a comment may butt up against a token
  CHECK(parse_instance("3 5#note\n7 9").size() == 4);
  CHECK(parse_instance("11 4").values() == std::vector<std::int64_t>{4, 11});
}

TEST_CASE("parse errors carry line and column") {
  ParseError neg = capture("10 -3");
  CHECK(neg.line() == 1);
  CHECK(neg.column() == 4);
  CHECK(std::string(neg.what()) == "line 1, column 4: non-positive entry '-3'");

  ParseError zero = capture("5 0");
  CHECK(zero.line() == 1);
  CHECK(zero.column() == 3);

  ParseError word = capture("10 20\n30 x7");
  CHECK(word.line() == 2);
  CHECK(word.column() == 4);
  CHECK(std::string(word.what()).find("non-integer token 'x7'") !=
        std::string::npos);

  ParseError big = capture("5 1099511627777");  // one past the value bound
  CHECK(big.line() == 1);
  CHECK(big.column() == 3);
  CHECK(std::string(big.what()).find("exceeds bound") != std::string::npos);
  CHECK_NOTHROW(parse_instance("5 1099511627776"));

  // oversized tokens must not overflow on the way to the bound check
  ParseError huge = capture("5 99999999999999999999999999999999");
  CHECK(std::string(huge.what()).find("exceeds bound") != std::string::npos);

  ParseError empty = capture("  # only a comment\n");
  CHECK(std::string(empty.what()).find("empty input") != std::string::npos);

  ParseError lone = capture("7\n");
  CHECK(lone.line() == 2);
  CHECK(std::string(lone.what()).find("fewer than 2 entries") !=
        std::string::npos);
}

TEST_CASE("stream and file loading") {
  std::istringstream in("8 3 5\n");
  CHECK(parse_instance_stream(in).values() ==
        std::vector<std::int64_t>{3, 5, 8});

  std::string path = "ssr_io_test_tmp.txt";
  {
    std::ofstream out(path);
    out << "# generated\n12\n9\n4\n";
  }
  Instance inst = load_instance(path);
  CHECK(inst.values() == std::vector<std::int64_t>{4, 9, 12});
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_instance("no_such_file_here.txt"), std::runtime_error);
}

TEST_CASE("format_values round-trips through the parser") {
  std::vector<std::int64_t> values{14, 3, 21, 7, 11};
  std::string text = format_values(values);
  CHECK(text == "14\n3\n21\n7\n11\n");
  Instance inst = parse_instance(text);
  CHECK(inst.values() == std::vector<std::int64_t>{3, 7, 11, 14, 21});
  CHECK(inst.position(4) == 2);
}

TEST_CASE("set reports are 1-based and carry input positions") {
  Instance inst = Instance::from_values({30, 10, 20});
  SetReport s = make_set_report(inst, {0, 2});
  CHECK(s.indices == std::vector<int>{1, 3});
  CHECK(s.positions == std::vector<int>{2, 1});
  CHECK(s.values == std::vector<std::int64_t>{10, 30});
  CHECK(s.sum == 40);
}

TEST_CASE("report_json is a stable single line with nulls for absent fields") {
  Instance inst = Instance::from_values({4, 5, 6, 7});
  SolutionPair pair = evaluate_pair(inst, {0, 3}, {1, 2});
  RunReport report = make_report("exact", inst, pair, std::nullopt, 2,
                                 std::uint64_t{64}, std::nullopt);
  std::string expected =
      "{\"mode\":\"exact\",\"n\":4,\"epsilon\":null,"
      "\"ratio\":{\"num\":1,\"den\":1,\"decimal\":\"1\"},"
      "\"s1\":{\"indices\":[1,4],\"positions\":[1,4],\"values\":[4,7],"
      "\"sum\":11},"
      "\"s2\":{\"indices\":[2,3],\"positions\":[2,3],\"values\":[5,6],"
      "\"sum\":11},"
      "\"p_star\":3,\"elapsed_ms\":null,\"table_cells\":64}\n";
  CHECK(report_json(report) == expected);
  CHECK(report_json(report) == report_json(report));
}

TEST_CASE("report_json with epsilon and timing") {
  Instance inst = Instance::from_values({10, 20, 30});
  SolutionPair pair = evaluate_pair(inst, {0, 1}, {2});
  RunReport report = make_report("fptas", inst, pair, std::string("1/2"), 1,
                                 std::uint64_t{0}, 12.5);
  std::string line = report_json(report);
  CHECK(line.find("\"epsilon\":\"1/2\"") != std::string::npos);
  CHECK(line.find("\"elapsed_ms\":12.5") != std::string::npos);
  CHECK(line.find("\"p_star\":2") != std::string::npos);
  CHECK(line.back() == '\n');
  CHECK(line.find('\n') == line.size() - 1);
}

TEST_CASE("report_text shows the reduced ratio") {
  Instance inst = Instance::from_values({4, 5, 6, 7});
  SolutionPair pair = evaluate_pair(inst, {0, 3}, {1, 2});
  RunReport report = make_report("exact", inst, pair, std::nullopt,
                                 std::nullopt, std::nullopt, std::nullopt);
  std::string text = report_text(report);
  CHECK(text.find("ratio:      1 (1/1)") != std::string::npos);
  CHECK(text.find("s1 indices: 1 4") != std::string::npos);
  CHECK(text.find("s2 sum:     11") != std::string::npos);
  CHECK(text.find("p_star") == std::string::npos);
}
