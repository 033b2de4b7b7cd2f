#include <doctest.h>

#include <cstdlib>

#include "reasm/error.hpp"
#include "reasm/fixtures.hpp"
#include "reasm/solvers.hpp"

using namespace reasm;

TEST_CASE("exact arrangements") {
  auto s7 = fixtures::s7();
  auto b = exact_arrangement(s7, Objective::beta);
  CHECK(b.value == 16);
  CHECK(evaluate_arrangement(s7, *b.arrangement).beta == 16);
  CHECK(b.stats.states == 256);
  CHECK(exact_arrangement(s7, Objective::alpha).value == 4);

  auto p3 = exact_arrangement(generate::path(3), Objective::beta);
  CHECK(p3.value == 2);
  CHECK(p3.arrangement->to_text() == "1 2 3");
  CHECK(exact_arrangement(generate::complete(3), Objective::beta).value == 4);
  CHECK(exact_arrangement(Graph(1, {}), Objective::beta).value == 0);
}

TEST_CASE("anchored arrangements") {
  auto s7 = fixtures::s7();
  CHECK_THROWS_AS(exact_arrangement(s7, Objective::beta, 1), InfeasibleError);
  auto a = exact_arrangement(s7, Objective::beta, 2);
  CHECK(a.arrangement->at(1) == 2);
  CHECK(a.value == 16);
  // Path 1-2-3 anchored at its middle: 2 must be followed by a vertex of degree >= 2.
  CHECK_THROWS_AS(exact_arrangement(generate::path(3), Objective::beta, 2), InfeasibleError);
  CHECK_THROWS_AS(exact_arrangement(s7, Objective::beta, 9), ValidationError);
}

TEST_CASE("exact linear reassemblings") {
  CHECK(exact_linear_reassembling(fixtures::s7(), Objective::beta).value == 29);
  auto q3a = exact_linear_reassembling(fixtures::q3(), Objective::alpha);
  CHECK(q3a.value == 5);
  CHECK(q3a.tree->is_linear());
  auto q3b = exact_linear_reassembling(fixtures::q3(), Objective::beta);
  CHECK(q3b.value == 49);
  CHECK(measures(fixtures::q3(), *q3b.tree).beta == 49);
  CHECK_THROWS_AS(exact_linear_reassembling(fixtures::s7(), Objective::beta, 1), InfeasibleError);
}

TEST_CASE("brute force agrees on small cases") {
  CHECK(brute_force_arrangement(generate::complete(3), Objective::beta).value == 4);
  CHECK(brute_force_arrangement(generate::path(2), Objective::alpha).value == 1);
  CHECK(brute_force_arrangement(fixtures::s7(), Objective::beta).value == 16);
  CHECK_THROWS_AS(brute_force_arrangement(generate::path(11), Objective::beta), LimitError);
  CHECK_THROWS_AS(brute_force_binary_reassembling(generate::path(9), Objective::beta), LimitError);
}

TEST_CASE("max witness is lex-least once the bound is reached") {
  Graph g(6, {{1, 2}, {1, 3}, {1, 6}, {2, 5}, {3, 4}});
  auto dp = exact_arrangement(g, Objective::alpha);
  auto bf = brute_force_arrangement(g, Objective::alpha);
  CHECK(dp.value == bf.value);
  CHECK(dp.arrangement->to_text() == bf.arrangement->to_text());
}

TEST_CASE("binary tree enumeration") {
  long long count = 0;
  for_each_binary_tree(5, [&](const std::vector<std::uint32_t>& masks) {
    ++count;
    CHECK(masks.size() == 9);
  });
  CHECK(count == 105); // 7!!
  auto k8 = brute_force_binary_reassembling(fixtures::k8(), Objective::beta);
  CHECK(k8.value == 127);
  CHECK(k8.stats.states == 135135);
  CHECK(brute_force_binary_reassembling(fixtures::q3(), Objective::alpha).value == 4);
}

TEST_CASE("DP size limit") {
  SolverOptions small;
  small.dp_limit = 5;
  CHECK_THROWS_AS(exact_arrangement(generate::path(6), Objective::beta, std::nullopt, small), LimitError);
  setenv("REASM_DP_LIMIT", "7", 1);
  CHECK(SolverOptions::default_dp_limit() == 7);
  setenv("REASM_DP_LIMIT", "junk", 1);
  CHECK(SolverOptions::default_dp_limit() == 24);
  unsetenv("REASM_DP_LIMIT");
}
