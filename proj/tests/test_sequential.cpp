#include <doctest.h>

#include "reasm/error.hpp"
#include "reasm/fixtures.hpp"
#include "reasm/sequential.hpp"

using namespace reasm;

TEST_CASE("sequential reassembling of a triangle") {
  Graph k3 = generate::complete(3);
  auto trace = seq_reassemble(k3, {{1, 2}, {2, 3}, {1, 3}});
  REQUIRE(trace.chain.size() == 3);
  CHECK(trace.chain[0] == Partition{VertexSet{1}, VertexSet{2}, VertexSet{3}});
  CHECK(trace.chain[1] == Partition{VertexSet{1, 2}, VertexSet{3}});
  CHECK(trace.chain[2] == Partition{VertexSet{1, 2, 3}});
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[1].trigger == Edge{2, 3});
  CHECK(trace.steps[1].bridges == std::vector<Edge>{{1, 3}, {2, 3}});
  CHECK(trace.steps[1].consumed == std::vector<Edge>{{1, 3}});
  CHECK(bin(k3, {{1, 2}, {2, 3}, {1, 3}}).to_text() == "((1 2) 3)");
}

TEST_CASE("errors") {
  Graph k3 = generate::complete(3);
  CHECK_THROWS_AS(seq_reassemble(k3, {{1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(seq_reassemble(k3, {{1, 2}, {2, 3}, {1, 3}, {1, 2}}), ValidationError);
  Graph split(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(seq_reassemble(split, {{1, 2}, {3, 4}}), ValidationError);
  CHECK_THROWS_AS(parse_ordering("1 2 3\n"), ValidationError);
}

TEST_CASE("worked orderings give the linear tree") {
  CHECK(bin(fixtures::s7(), parse_ordering("1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n1 8\n")).to_text() == fixtures::b3);
  CHECK(bin(fixtures::q3(), parse_ordering("1 2\n1 3\n3 4\n3 5\n5 6\n5 7\n7 8\n1 6\n2 4\n2 8\n4 7\n6 8\n")).to_text() ==
        fixtures::b3);
  CHECK(bin(generate::path(2), {{1, 2}}).to_text() == "(1 2)");
}

TEST_CASE("chain_to_ordering") {
  Graph k3 = generate::complete(3);
  auto chain = tree_chain(parse_tree("((1 2) 3)"));
  CHECK(chain_to_ordering(k3, chain) == EdgeOrdering{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_WITH_AS(chain_to_ordering(fixtures::s7(), tree_chain(parse_tree(fixtures::b1))),
                       doctest::Contains("not strict"), ValidationError);
  CHECK(chain_to_ordering(generate::path(2), tree_chain(parse_tree("(1 2)"))) == EdgeOrdering{{1, 2}});
  PartitionChain bad{{VertexSet{1}, VertexSet{2}, VertexSet{3}}, {VertexSet{1, 2, 3}}};
  CHECK_THROWS_AS(chain_to_ordering(k3, bad), ValidationError);
}

TEST_CASE("canonical ordering") {
  Graph k3 = generate::complete(3);
  CHECK(canonical_ordering(k3, parse_tree("((1 2) 3)")) == EdgeOrdering{{1, 2}, {1, 3}, {2, 3}});
  CHECK(canonical_ordering(generate::path(2), parse_tree("(1 2)")) == EdgeOrdering{{1, 2}});
  auto s7 = fixtures::s7();
  EdgeOrdering pi3{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}};
  CHECK(canonical_ordering(s7, parse_tree(fixtures::b3)) == pi3);
  CHECK_THROWS_AS(canonical_ordering(s7, parse_tree(fixtures::b5)), ValidationError);
  // Children whose orderings both are non-empty: (1 2) and (3 4) on a 4-cycle.
  Graph c4 = generate::cycle(4);
  CHECK(canonical_ordering(c4, parse_tree("((3 4) (1 2))")) == EdgeOrdering{{1, 2}, {3, 4}, {1, 4}, {2, 3}});
  auto q3 = fixtures::q3();
  auto b2 = parse_tree(fixtures::b2);
  CHECK(bin(q3, canonical_ordering(q3, b2)) == b2);
}
