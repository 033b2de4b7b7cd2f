#include <doctest.h>

#include <random>

#include "reasm/enumerate.hpp"
#include "reasm/error.hpp"
#include "reasm/fixtures.hpp"
#include "reasm/reduction.hpp"

using namespace reasm;

namespace {
// Non-clique vertices strictly inside the clique span.
int interlopers(const AuxiliaryGraph& a, const VCSequence& s) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(s.order.size()); ++i)
    if (a.in_clique(s.order[i])) {
      if (first < 0) first = i;
      last = i;
    }
  int count = 0;
  for (int i = first; i <= last; ++i) count += !a.in_clique(s.order[i]);
  return count;
}
} // namespace

TEST_CASE("auxiliary graph construction") {
  auto a = build_auxiliary(generate::path(2), 1);
  CHECK(a.p == 2);
  CHECK(a.size() == 4);
  CHECK(a.combined.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {3, 4}});

  auto k = build_auxiliary(generate::complete(3), 1);
  CHECK(k.p == 6);
  CHECK(k.size() == 9);
  CHECK(k.combined.m() == 3 + 21);
  auto cuts = k.combined.cut_vertices();
  CHECK(cuts == std::vector<Vertex>{1});
  CHECK_THROWS_AS(build_auxiliary(Graph(3, {{1, 2}}), 1), ValidationError);
}

TEST_CASE("vertex and cutwidth sequences") {
  auto a = build_auxiliary(generate::path(2), 1);
  auto s = vc_sequence(a, {3, 4, 1, 2});
  CHECK(s.pairs == std::vector<std::pair<int, int>>{{0, 2}, {0, 2}, {1, 0}, {0, 0}});
  CHECK(s.beta() == 5);
  CHECK(s.beta() == evaluate_arrangement(a.combined, LinearArrangement(s.order)).beta);
  CHECK_THROWS_AS(vc_sequence(a, {3, 4, 1}), ValidationError);
  CHECK_THROWS_AS(vc_sequence(a, {3, 4, 1, 1}), ValidationError);

  std::mt19937_64 rng(7);
  auto k = build_auxiliary(generate::complete(3), 2);
  for (int i = 0; i < 100; ++i) {
    auto phi = enumerate::random_arrangement(k.size(), rng);
    auto seq = vc_sequence(k, phi.order());
    VertexSet prefix;
    for (std::size_t j = 0; j < seq.order.size(); ++j) {
      prefix.insert(seq.order[j]);
      CHECK(seq.pairs[j].first + seq.pairs[j].second == k.combined.boundary_degree(prefix));
    }
  }
}

TEST_CASE("scatter and unbalance") {
  auto a = build_auxiliary(generate::path(2), 1);
  CHECK(scatter(a, vc_sequence(a, {3, 4, 1, 2})) == 0);
  CHECK(scatter(a, vc_sequence(a, {3, 2, 4, 1})) == 1);
  CHECK(unbalance(a, vc_sequence(a, {3, 4, 1, 2})) == 0);
  CHECK(unbalance(a, vc_sequence(a, {2, 3, 4, 1})) == 1);
  CHECK(right_balanced(a, vc_sequence(a, {3, 4, 1, 2})));
  CHECK(left_balanced(a, vc_sequence(a, {2, 1, 4, 3})));
}

TEST_CASE("descatter") {
  auto a = build_auxiliary(generate::path(2), 1);
  auto s = vc_sequence(a, {3, 2, 4, 1});
  CHECK(s.beta() == 8);
  auto d = descatter_move(a, s);
  CHECK(d.order == std::vector<Vertex>{2, 3, 4, 1});
  CHECK(d.beta() == 7);
  CHECK_THROWS_AS(descatter_move(a, d), ValidationError);
}

TEST_CASE("descatter can leave scatter unchanged but always shrinks the span") {
  // P3 anchored at leaf 1: clique = {1,4,5,6,7}; pattern K v K K K u K.
  auto a = build_auxiliary(generate::path(3), 1);
  auto s = vc_sequence(a, {4, 2, 5, 6, 1, 3, 7});
  REQUIRE(scatter(a, s) == 1);
  auto d = descatter_move(a, s);
  CHECK(d.order == std::vector<Vertex>{2, 4, 5, 6, 1, 3, 7});
  CHECK(scatter(a, d) == 1);
  CHECK(d.beta() < s.beta());
  CHECK(interlopers(a, d) == interlopers(a, s) - 1);
}

TEST_CASE("rebalance") {
  auto a = build_auxiliary(generate::path(2), 1);
  auto s = vc_sequence(a, {2, 3, 4, 1});
  auto r = rebalance_move(a, s);
  CHECK(r.order == std::vector<Vertex>{3, 4, 1, 2});
  CHECK(unbalance(a, r) == 0);
  CHECK(r.beta() <= s.beta());
  CHECK_THROWS_AS(rebalance_move(a, r), ValidationError);
  CHECK_THROWS_AS(rebalance_move(a, vc_sequence(a, {3, 2, 4, 1})), ValidationError);
}

TEST_CASE("normalize") {
  auto a = build_auxiliary(generate::path(2), 1);
  auto n = normalize_sequence(a, vc_sequence(a, {3, 2, 4, 1}));
  CHECK(n.order == std::vector<Vertex>{3, 4, 1, 2});
  CHECK(n.beta() == 5);
  CHECK(normalize_sequence(a, n).order == n.order);

  std::mt19937_64 rng(11);
  auto k = build_auxiliary(generate::complete(3), 1);
  for (int i = 0; i < 200; ++i) {
    auto s = vc_sequence(k, enumerate::random_arrangement(k.size(), rng).order());
    auto once = normalize_sequence(k, s);
    CHECK(once.beta() <= s.beta());
    CHECK(scatter(k, once) == 0);
    CHECK(right_balanced(k, once));
    CHECK(normalize_sequence(k, once).order == once.order);
  }
}

TEST_CASE("beta reduction matches direct solves") {
  for (const Graph& g : {generate::path(3), generate::cycle(4), generate::star(3)}) {
    auto r2a = reduce_beta(g, BetaDirection::reassembling_to_arrangement);
    CHECK(r2a.best_beta == exact_arrangement(g, Objective::beta).value);
    REQUIRE(r2a.arrangement);
    CHECK(evaluate_arrangement(g, *r2a.arrangement).beta == r2a.best_beta);
    CHECK(r2a.scatter0);
    CHECK(r2a.balanced);
    auto a2r = reduce_beta(g, BetaDirection::arrangement_to_reassembling);
    CHECK(a2r.best_beta == exact_linear_reassembling(g, Objective::beta).value);
    REQUIRE(a2r.tree);
    CHECK(a2r.tree->is_linear());
    CHECK(a2r.anchors.size() == static_cast<std::size_t>(g.n()));
  }
  auto c4 = generate::cycle(4);
  auto seq = reduce_beta(c4, BetaDirection::arrangement_to_reassembling, {}, 1);
  auto par = reduce_beta(c4, BetaDirection::arrangement_to_reassembling, {}, 3);
  CHECK(seq.best_w == par.best_w);
  CHECK(seq.tree == par.tree);
  CHECK_THROWS_AS(reduce_beta(Graph(3, {{1, 2}}), BetaDirection::arrangement_to_reassembling), ValidationError);
  CHECK(parse_direction("a2r") == BetaDirection::arrangement_to_reassembling);
  CHECK_THROWS_AS(parse_direction("x"), ValidationError);
}

TEST_CASE("alpha reduction") {
  auto q3 = reduce_alpha(fixtures::q3());
  CHECK_FALSE(q3.direct);
  CHECK(q3.alpha == exact_arrangement(fixtures::q3(), Objective::alpha).value);

  Graph tt(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  auto r = reduce_alpha(tt);
  CHECK(r.direct);
  CHECK(r.alpha == exact_arrangement(tt, Objective::alpha).value);

  auto k4 = reduce_alpha(generate::complete(4));
  CHECK_FALSE(k4.direct);
  CHECK(k4.alpha == brute_force_arrangement(generate::complete(4), Objective::alpha).value);
  CHECK_THROWS_AS(reduce_alpha(fixtures::k8()), ValidationError);
}

TEST_CASE("alpha-optimal reassembling from an arrangement") {
  auto s7 = fixtures::s7();
  auto phi = exact_arrangement(s7, Objective::alpha).arrangement;
  CHECK(measures(s7, alpha_reassembling_from_arrangement(s7, *phi)).alpha == 7);
  auto q3 = fixtures::q3();
  CHECK(measures(q3, alpha_reassembling_from_arrangement(q3, *exact_arrangement(q3, Objective::alpha).arrangement))
            .alpha == 5);
  auto p3 = generate::path(3);
  CHECK(measures(p3, alpha_reassembling_from_arrangement(p3, *exact_arrangement(p3, Objective::alpha).arrangement))
            .alpha == 2);
}
