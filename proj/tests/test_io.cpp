#include "doctest.h"

#include "gpw/constructions.hpp"
#include "gpw/error.hpp"
#include "gpw/io.hpp"

#include <cstdio>
#include <filesystem>

using namespace gpw;

namespace {

const std::vector<std::string> kFixtures = {
    "pauli-m2",     "quaternion", "example-3-16", "example-3-18",
    "w3",           "nilspan",    "grassmann:3",  "prop328:2",
    "matrix:2",     "triangular:3"};

bool same_constants(const GradedAlgebra &a, const GradedAlgebra &b) {
  if (a.dim() != b.dim() || a.labels() != b.labels() ||
      a.degrees() != b.degrees() || !(a.group() == b.group()) ||
      a.unit() != b.unit())
    return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.product(i, j) == b.product(i, j)))
        return false;
  return true;
}

} // namespace

TEST_CASE("every fixture survives a text round trip") {
  for (const auto &name : kFixtures) {
    INFO(name);
    auto A = resolve_algebra(name);
    auto text = format_algebra(A);
    auto B = parse_algebra(text);
    CHECK(same_constants(A, B));
    CHECK(format_algebra(B) == text);
    CHECK(validate(B).valid());
  }
}

TEST_CASE("canonical data survives a round trip") {
  auto G = make_group({2, 2});
  auto A = elementary_canonical(G, pauli_cocycle(), {G.identity()});
  auto B = parse_algebra(format_algebra(A));
  REQUIRE(B.canonical().has_value());
  CHECK(B.canonical()->sigma == A.canonical()->sigma);
  CHECK(B.canonical()->theta == A.canonical()->theta);
  CHECK(B.canonical()->H == A.canonical()->H);
}

TEST_CASE("save and load through a file") {
  auto path = std::filesystem::temp_directory_path() / "gpw_io_test.alg";
  auto P = pauli_m2();
  save_algebra(P, path.string());
  auto L = load_algebra(path.string());
  std::filesystem::remove(path);
  CHECK(same_constants(P, L));
  CHECK(L.dim() == 4);
  CHECK(validate(L).valid());
  CHECK_THROWS_AS(load_algebra("/nonexistent/dir/x.alg"), InvalidInputError);
}

TEST_CASE("omitted products are zero") {
  auto A = parse_algebra("group: [2]\n"
                         "basis: [a, b]\n"
                         "degrees: [e, (1)]\n"
                         "products:\n"
                         "  0 1 -> [(1, 1)]\n");
  CHECK(A.product(0, 1).size() == 1);
  CHECK(A.product(1, 0).empty());
  CHECK(A.product(1, 1).empty());
  CHECK(A.product(0, 0).empty());
}

TEST_CASE("grading-law violations load but fail validation") {
  auto A = parse_algebra("group: Z2\n"
                         "basis: [a, b]\n"
                         "degrees: [(1), (1)]\n"
                         "products:\n"
                         "  0 0 -> [(1, 1)]\n");
  auto r = validate(A);
  CHECK_FALSE(r.valid());
}

TEST_CASE("malformed files report the line") {
  auto expect_line = [](const std::string &text, std::size_t line) {
    try {
      parse_algebra(text);
      FAIL("expected a parse error");
    } catch (const ParseError &e) {
      CHECK(e.position() == line);
    }
  };
  expect_line("group: [2]\nbasis: [a]\ndegrees: [e]\nproducts:\n  0 x -> []\n",
              5);
  expect_line("group: [2\nbasis: [a]\ndegrees: [e]\n", 1);
  expect_line("group: [2]\nbasis: [a]\ndegrees: [(3,1)]\n", 3);
  expect_line("group: [2]\nbasis: [a]\nbogus: 1\ndegrees: [e]\n", 3);
  CHECK_THROWS_AS(parse_algebra("group: [2]\nbasis: [a]\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("group: [2]\nbasis: [a]\ndegrees: [e]\n"
                                "products:\n  0 0 -> [(4, 1)]\n"),
                  Error);
}

TEST_CASE("labels that cannot be written are rejected") {
  GradedAlgebra A(make_group({}), {"a,b"}, {GroupElement{}});
  CHECK_THROWS_AS(format_algebra(A), InvalidInputError);
}

TEST_CASE("fixture resolution") {
  CHECK(resolve_algebra("grassmann:4").dim() == 15);
  CHECK(resolve_algebra("matrix:3").dim() == 9);
  CHECK_THROWS_AS(resolve_algebra("no-such-fixture"), InvalidInputError);
  CHECK_THROWS_AS(resolve_algebra("grassmann:"), InvalidInputError);
  CHECK_FALSE(fixture_names().empty());
}
