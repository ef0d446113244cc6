#include <doctest.h>

#include <random>
#include <sstream>

#include "cei/errors.hpp"
#include "cei/graph6.hpp"
#include "oracles.hpp"

using namespace cei;

TEST_CASE("graph6 encodes small graphs") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(complete_graph(1)) == "@");
  CHECK(to_graph6(empty_graph(2)) == "A?");
  CHECK(to_graph6(path_graph(2)) == "A_");
  CHECK_THROWS_AS(to_graph6(Graph()), InvalidArgument);
}

TEST_CASE("graph6 decodes small graphs") {
  CHECK(from_graph6("@") == complete_graph(1));
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);     // missing body
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);   // trailing garbage
  CHECK_THROWS_AS(from_graph6("B\x7f"), ParseError); // byte above 126
  CHECK_THROWS_AS(from_graph6("B "), ParseError);    // byte below 63
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);    // non-zero padding
  CHECK_THROWS_AS(from_graph6("?"), ParseError);     // order 0
  CHECK_THROWS_AS(from_graph6("~?"), ParseError);    // truncated long header
}

TEST_CASE("graph6 long order headers round trip") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {62, 63, 100, 300}) {
    Graph g = oracle::random_graph(n, 0.1, rng);
    std::string text = to_graph6(g);
    CHECK((n <= 62 ? text[0] != '~' : text[0] == '~'));
    CHECK(from_graph6(text) == g);
  }
  CHECK(to_graph6(empty_graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 random round trip") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(1 + rng() % 20, 0.5, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 line reader skips blanks and strips CR") {
  std::istringstream in("Bw\r\n\n  \nC~\n");
  auto lines = read_graph6_lines(in);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].text == "Bw");
  CHECK(lines[0].line_number == 1);
  CHECK(lines[1].text == "C~");
  CHECK(lines[1].line_number == 4);
}
