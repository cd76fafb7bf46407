#include <doctest.h>

#include <sstream>

#include "mlbalance/csv.hpp"
#include "mlbalance/error.hpp"
#include "mlbalance/format.hpp"

using namespace mlbalance;

TEST_CASE("round_half_up") {
    CHECK(round_half_up(0.575) == "0.58");
    CHECK(round_half_up(0.585) == "0.59");
    CHECK(round_half_up((0.21 + 0.94) / 2.0) == "0.58");
    CHECK(round_half_up((0.24 + 0.93) / 2.0) == "0.59");
    CHECK(round_half_up(0.574) == "0.57");
    CHECK(round_half_up(0.0) == "0.00");
    CHECK(round_half_up(1.0) == "1.00");
    CHECK(round_half_up(0.995) == "1.00");
    CHECK(round_half_up(9.995) == "10.00");
    CHECK(round_half_up(0.125, 2) == "0.13");
    CHECK(round_half_up(2.5, 0) == "3");
    CHECK(round_half_up(-0.125, 2) == "-0.13");
}

TEST_CASE("format_double round trips") {
    CHECK(format_double(8.0) == "8");
    CHECK(format_double(0.1) == "0.1");
    const double x = 21.555555555555557;
    CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("csv splitting") {
    CHECK(csv::split_line("a,b,,c", 1) == std::vector<std::string>{"a", "b", "", "c"});
    CHECK(csv::split_line(R"(x,"{""a"":1,""b"":2}",y)", 1) ==
          std::vector<std::string>{"x", R"({"a":1,"b":2})", "y"});
    CHECK_THROWS_AS(csv::split_line("\"open", 4), ParseError);
    CHECK(csv::escape("plain") == "plain");
    CHECK(csv::escape(R"({"a":1,"b":2})") == R"("{""a"":1,""b"":2}")");

    std::istringstream in("# comment\n\nid,A\n1,0\n");
    const auto doc = csv::read(in);
    CHECK(doc.header.line == 3);
    REQUIRE(doc.rows.size() == 1);
    CHECK(doc.rows[0].line == 4);
}
