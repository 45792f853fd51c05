#include <doctest.h>

#include <set>

#include "beliefs/frame.hpp"

using namespace beliefs;

namespace {

Frame abc() { return Frame({"w1", "w2", "w3"}); }

} // namespace

TEST_CASE("frame construction validates labels") {
  CHECK_NOTHROW(Frame({"a"}));
  CHECK_THROWS_AS(Frame({}), validation_error);
  CHECK_THROWS_AS(Frame({"a", "a"}), validation_error);
  CHECK_THROWS_AS(Frame({"a", ""}), validation_error);
  CHECK_THROWS_AS(Frame(std::vector<std::string>(21, "x")), validation_error);

  std::vector<std::string> many;
  for (int i = 0; i < 20; ++i) many.push_back("s" + std::to_string(i));
  CHECK_NOTHROW(Frame{many});
}

TEST_CASE("set algebra on a three-element frame") {
  const Frame f = abc();
  const Subset w1 = Subset::singleton(f, 0);
  const Subset w2 = Subset::singleton(f, 1);
  const Subset w13 = Subset(f, 0b101);
  const Subset w12 = Subset(f, 0b011);

  CHECK((w1 & w2).is_empty());
  CHECK(w12.complement() == Subset(f, 0b100));
  CHECK(w13.cardinality() == 2);
  CHECK((w1 | w2) == w12);
  CHECK(w1.subset_of(w12));
  CHECK_FALSE(w13.subset_of(w12));
  CHECK(Subset::empty_set(f).subset_of(w1));
  CHECK(Subset::universe(f).bits() == 0b111);
}

TEST_CASE("subsets of different frames do not mix") {
  const Frame f = abc();
  const Frame g({"a", "b", "c"});
  CHECK_THROWS_AS(Subset::singleton(f, 0).intersect(Subset::singleton(g, 0)), validation_error);
  CHECK_THROWS_AS(Subset::singleton(f, 0).subset_of(Subset::universe(g)), validation_error);

  // Same labels means the same frame, regardless of object identity.
  const Frame f2({"w1", "w2", "w3"});
  CHECK_NOTHROW(Subset::singleton(f, 0).unite(Subset::singleton(f2, 1)));
}

TEST_CASE("subset construction is bounds checked") {
  const Frame f = abc();
  CHECK_THROWS_AS(Subset(f, 0b1000), validation_error);
  CHECK_THROWS_AS(Subset::singleton(f, 3), validation_error);
  const std::vector<std::string> unknown{"nope"};
  CHECK_THROWS_AS(Subset::from_labels(f, unknown), validation_error);

  const std::vector<std::string> two{"w3", "w1"};
  CHECK(Subset::from_labels(f, two).bits() == 0b101);
}

TEST_CASE("enumerate_subsets walks the power set in bitmask order") {
  const Frame one({"a"});
  const auto tiny = enumerate_subsets(one);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0].is_empty());
  CHECK(tiny[1].is_universe());

  const Frame two({"a", "b"});
  const auto four = enumerate_subsets(two);
  REQUIRE(four.size() == 4);
  CHECK(four.front().is_empty());
  CHECK(four.back().is_universe());

  // Exhaustive count: each of the 8 bitmasks appears exactly once.
  const auto eight = enumerate_subsets(abc());
  REQUIRE(eight.size() == 8);
  std::set<std::uint32_t> seen;
  for (const auto& s : eight) seen.insert(s.bits());
  CHECK(seen.size() == 8);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 7);
}

TEST_CASE("set-algebra invariants over all pairs") {
  const Frame f({"a", "b", "c", "d"});
  const auto all = enumerate_subsets(f);
  for (const auto& a : all) {
    CHECK(a.complement().complement() == a);
    CHECK((a & Subset::universe(f)) == a);
    CHECK((a | Subset::empty_set(f)) == a);
    for (const auto& b : all) {
      CHECK((a & b).cardinality() + (a | b).cardinality() == a.cardinality() + b.cardinality());
    }
  }
}

TEST_CASE("member labels come back in frame order") {
  const Frame f = abc();
  const Subset s(f, 0b101);
  CHECK(s.member_labels() == std::vector<std::string>{"w1", "w3"});
  CHECK(Subset::empty_set(f).member_labels().empty());
}
