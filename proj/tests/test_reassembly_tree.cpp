#include <doctest.h>

#include "reasm/error.hpp"
#include "reasm/fixtures.hpp"
#include "reasm/reassembly_tree.hpp"

using namespace reasm;

namespace {
std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<Vertex>> xs) {
  std::vector<VertexSet> out;
  for (auto x : xs) out.push_back(VertexSet(x));
  return out;
}
} // namespace

TEST_CASE("validate accepts binary trees and rejects the rest") {
  auto t = ReassemblyTree::validate(VertexSet{1, 2, 3}, sets({{1}, {2}, {3}, {1, 2}, {1, 2, 3}}));
  CHECK(t.cluster_count() == 5);
  CHECK(t.sibling(VertexSet{3}) == VertexSet{1, 2});
  CHECK(t.parent(VertexSet{1}) == VertexSet{1, 2});
  CHECK(t.height() == 2);
  CHECK(t.to_text() == "((1 2) 3)");
  CHECK_THROWS_AS(t.sibling(VertexSet{1, 2, 3}), ValidationError);

  CHECK_THROWS_WITH_AS(ReassemblyTree::validate(VertexSet{1, 2, 3}, sets({{1}, {2}, {1, 2}, {1, 2, 3}})),
                       "condition 1 violated: missing singleton {3}", ValidationError);
  CHECK_THROWS_WITH_AS(ReassemblyTree::validate(VertexSet{1, 2, 3}, sets({{1}, {2}, {3}, {1, 2}})),
                       "condition 2 violated: missing root {1,2,3}", ValidationError);
  // {1,2} and {2,3} overlap: {1} finds no partner.
  CHECK_THROWS_AS(ReassemblyTree::validate(VertexSet{1, 2, 3}, sets({{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}})),
                  ValidationError);
  // Root with three children is not binary.
  CHECK_THROWS_AS(ReassemblyTree::validate(VertexSet{1, 2, 3}, sets({{1}, {2}, {3}, {1, 2, 3}})), ValidationError);
}

TEST_CASE("parse and print") {
  auto b1 = parse_tree(fixtures::b1);
  CHECK(b1.cluster_count() == 15);
  CHECK(b1.to_text() == fixtures::b1);
  CHECK(parse_tree(" ( 3 ( 2 1 ) ) ").to_text() == "((1 2) 3)");
  CHECK(parse_tree("7").cluster_count() == 1);
  CHECK_THROWS_AS(parse_tree("((1 2) 1)"), ValidationError);
  CHECK_THROWS_AS(parse_tree("((1 2) 3"), ValidationError);
  CHECK_THROWS_AS(parse_tree("(1 2 3)"), ValidationError);
  CHECK_THROWS_AS(parse_tree("(1 2))"), ValidationError);
  CHECK_THROWS_AS(parse_tree("(1 x)"), ValidationError);
}

TEST_CASE("structure queries") {
  auto b3 = parse_tree(fixtures::b3);
  CHECK(b3.is_linear());
  CHECK_FALSE(parse_tree(fixtures::b1).is_linear());
  CHECK(parse_tree(fixtures::b5).is_linear());
  CHECK(b3.height() == 7);
  auto path = b3.path_to_root(3);
  REQUIRE(path.size() == 7);
  CHECK(path[1] == VertexSet{1, 2, 3});
  CHECK(b3.subtree(VertexSet{1, 2, 3}).to_text() == "((1 2) 3)");
  CHECK(parse_tree(fixtures::b2).height() == 3);
}

TEST_CASE("measures on the worked examples") {
  auto q3 = fixtures::q3();
  auto m = measures(q3, parse_tree(fixtures::b1));
  CHECK(m.alpha == 4);
  CHECK(m.beta == 48);
  CHECK(m.per_cluster.size() == 15);
  // Hand count for the star: 14 over singletons, then 6, 2, 4, 2, 2, 2 and 0.
  CHECK(measures(fixtures::s7(), parse_tree(fixtures::b1)).beta == 32);
  CHECK(measures(fixtures::k8(), parse_tree(fixtures::b4)).beta == 127);
  CHECK_THROWS_AS(measures(generate::complete(4), parse_tree(fixtures::b1)), ValidationError);
}

TEST_CASE("strictness") {
  auto s7 = fixtures::s7();
  auto r = is_strict(s7, parse_tree(fixtures::b1));
  CHECK_FALSE(r.strict);
  REQUIRE(r.violation);
  CHECK(is_strict(s7, parse_tree(fixtures::b3)).strict);
  CHECK(is_strict(fixtures::q3(), parse_tree(fixtures::b1)).strict);
  CHECK_FALSE(is_strict(s7, parse_tree(fixtures::b5)).strict);
}

TEST_CASE("cross sections") {
  auto t = parse_tree("((1 2) (3 4))");
  auto cs = cross_sections(t);
  // {1|2|3|4}, {12|3|4}, {1|2|34}, {12|34}
  REQUIRE(cs.size() == 4);
  CHECK(cs.front().size() == 4);
  CHECK(cs.back() == Partition{VertexSet{1, 2}, VertexSet{3, 4}});
  CHECK(cross_sections(parse_tree(fixtures::b3)).size() == 7);
}
