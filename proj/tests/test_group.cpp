#include "doctest.h"

#include "gpw/error.hpp"
#include "gpw/group.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace gpw;

namespace {

const std::vector<std::vector<int>> kGroups = {
    {}, {1}, {2}, {5}, {2, 2}, {3, 5}, {2, 4}, {4, 6}, {2, 2, 2}, {3, 3, 2}};

} // namespace

TEST_CASE("elements reduce into canonical residues") {
  auto G = make_group({3, 5});
  CHECK(G.element({4, -1}) == GroupElement{1, 4});
  CHECK(G.element({-3, 10}).is_identity());
  CHECK(to_string(G.identity()) == "e");
  CHECK(to_string(G.element({2, 3})) == "(2,3)");
  CHECK(G.order() == 15);
  CHECK(make_group({}).order() == 1);
}

TEST_CASE("bad factors and mismatched elements are rejected") {
  CHECK_THROWS_AS(make_group({0}), InvalidGroupError);
  CHECK_THROWS_AS(make_group({3, -2}), InvalidGroupError);
  auto G = make_group({2, 2});
  CHECK_THROWS_AS(G.add(GroupElement{1}, GroupElement{1, 0}),
                  GroupMismatchError);
}

TEST_CASE("group axioms hold on every element triple") {
  for (const auto &f : kGroups) {
    auto G = make_group(f);
    auto els = G.elements();
    REQUIRE(els.size() == G.order());
    for (const auto &a : els) {
      CHECK(G.add(a, G.identity()) == a);
      CHECK(G.add(a, G.inverse(a)).is_identity());
      CHECK(G.sub(a, a).is_identity());
      for (const auto &b : els) {
        CHECK(G.add(a, b) == G.add(b, a));
        if (els.size() <= 12)
          for (const auto &c : els)
            CHECK(G.add(G.add(a, b), c) == G.add(a, G.add(b, c)));
      }
    }
  }
}

TEST_CASE("index_of and element_at are inverse bijections") {
  for (const auto &f : kGroups) {
    auto G = make_group(f);
    std::set<GroupElement> seen;
    for (std::size_t i = 0; i < G.order(); ++i) {
      auto a = G.element_at(i);
      CHECK(G.index_of(a) == i);
      seen.insert(a);
    }
    CHECK(seen.size() == G.order());
  }
}

TEST_CASE("order_of matches repeated addition") {
  for (const auto &f : kGroups) {
    auto G = make_group(f);
    for (const auto &a : G.elements()) {
      std::size_t m = 1;
      auto acc = a;
      while (!acc.is_identity()) {
        acc = G.add(acc, a);
        ++m;
      }
      CHECK(G.order_of(a) == m);
      CHECK(G.order() % m == 0);
      CHECK(G.scale(a, static_cast<long>(m)).is_identity());
    }
  }
}

TEST_CASE("parse and print round trip") {
  CHECK(parse_group("Z3xZ5") == make_group({3, 5}));
  CHECK(to_string(make_group({2, 2})) == "Z2xZ2");
  CHECK(to_string(make_group({})) == "Z1");
  auto G = make_group({3, 5});
  for (const auto &a : G.elements())
    CHECK(parse_element(G, to_string(a)) == a);
  CHECK(parse_element(G, "(4,7)") == GroupElement{1, 2});
  CHECK_THROWS_AS(parse_group("Q3"), ParseError);
  CHECK_THROWS_AS(parse_element(G, "(1)"), ParseError);
  CHECK_THROWS_AS(parse_element(G, "(1;2)"), ParseError);
}

TEST_CASE("subgroups are closed and cosets partition the group") {
  std::mt19937 rng(7);
  for (const auto &f : kGroups) {
    auto G = make_group(f);
    auto els = G.elements();
    for (int trial = 0; trial < 6; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
      std::vector<GroupElement> gens{els[pick(rng)]};
      if (trial % 2)
        gens.push_back(els[pick(rng)]);
      auto H = subgroup_generated(G, gens);
      CHECK(G.order() % H.order() == 0);
      CHECK(H.contains(G.identity()));
      for (const auto &a : H.elements())
        for (const auto &b : H.elements())
          CHECK(H.contains(G.sub(a, b)));
      for (const auto &g : gens)
        CHECK(H.contains(g));

      auto cells = cosets(H);
      CHECK(cells.size() == index(H));
      CHECK(index(H) * H.order() == G.order());
      std::set<GroupElement> all;
      for (const auto &cell : cells) {
        CHECK(cell.size() == H.order());
        for (const auto &a : cell) {
          all.insert(a);
          CHECK(H.contains(G.sub(a, cell.front())));
        }
      }
      CHECK(all.size() == G.order());
    }
  }
}

TEST_CASE("quotient projection is a surjective homomorphism with kernel H") {
  std::mt19937 rng(11);
  for (const auto &f : kGroups) {
    auto G = make_group(f);
    auto els = G.elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      auto H = subgroup_generated(G, {els[pick(rng)], els[pick(rng)]});
      auto q = quotient(G, H);
      CHECK(q.target.order() == index(H));
      std::set<GroupElement> image;
      for (const auto &a : els) {
        image.insert(q(a));
        CHECK(q(a).is_identity() == H.contains(a));
        for (const auto &b : els)
          CHECK(q(G.add(a, b)) == q.target.add(q(a), q(b)));
      }
      CHECK(image.size() == q.target.order());
    }
  }
}

TEST_CASE("product_with_z2 appends a factor") {
  CHECK(product_with_z2(make_group({3})) == make_group({3, 2}));
}
