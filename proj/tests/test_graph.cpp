#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "reasm/error.hpp"
#include "reasm/fixtures.hpp"
#include "reasm/graph.hpp"
#include "reasm/reassembly_tree.hpp"

using namespace reasm;

TEST_CASE("vertex sets") {
  VertexSet a{1, 3, 70};
  CHECK(a.size() == 3);
  CHECK(a.min() == 1);
  CHECK(a.max() == 70);
  CHECK(a.contains(70));
  CHECK_FALSE(a.contains(2));
  a.erase(70);
  CHECK(a == VertexSet{1, 3});
  CHECK(a.to_string() == "{1,3}");
  CHECK(VertexSet::range(2, 4) == VertexSet{2, 3, 4});
  CHECK(VertexSet{1, 2} < VertexSet{1, 3});
  CHECK(VertexSet{1, 2} < VertexSet{2});
  CHECK((VertexSet{1, 2} | VertexSet{5}) == VertexSet{1, 2, 5});
  CHECK((VertexSet{1, 2} - VertexSet{1}) == VertexSet{2});
  CHECK(VertexSet{}.min() == -1);
}

TEST_CASE("parse_graph") {
  Graph g = parse_graph("# triangle\n3 3\n1 2\n\n2 3\n3 1\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.degree(1) == 2);
  CHECK(to_text(g) == "3 3\n1 2\n1 3\n2 3\n");

  CHECK_THROWS_WITH_AS(parse_graph("3 1\n1 1\n"), "line 2: self-loop at vertex 1", ValidationError);
  CHECK_THROWS_WITH_AS(parse_graph("3 1\n1 4\n"), "line 2: endpoint out of range 1..3", ValidationError);
  CHECK_THROWS_WITH_AS(parse_graph("3 2\n1 2\n"), "header declares 2 edges, found 1", ValidationError);
  CHECK_THROWS_AS(parse_graph("3 1\n1 x\n"), ValidationError);
  CHECK_THROWS_AS(parse_graph("# nothing\n"), ValidationError);
}

TEST_CASE("degrees, bridges and boundaries") {
  Graph q3 = fixtures::q3();
  CHECK(q3.m() == 12);
  for (Vertex v = 1; v <= 8; ++v) CHECK(q3.degree(v) == 3);
  CHECK(q3.boundary_degree(VertexSet{1, 2}) == 4);
  CHECK(q3.bridge_count(VertexSet{1, 2}, VertexSet{3, 4}) == 2);
  CHECK(q3.bridges(VertexSet{1, 2}, VertexSet{3, 4}) == std::vector<Edge>{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(q3.bridges(VertexSet{1, 2}, VertexSet{2}), ValidationError);
  Graph s7 = fixtures::s7();
  CHECK(s7.degree(1) == 7);
  CHECK(s7.max_degree() == 7);
  CHECK(s7.boundary_degree(s7.vertices()) == 0);
}

TEST_CASE("connectivity and cut vertices") {
  CHECK(generate::path(4).cut_vertices() == std::vector<Vertex>{2, 3});
  CHECK(generate::cycle(5).cut_vertices().empty());
  CHECK(generate::star(3).cut_vertices() == std::vector<Vertex>{1});
  Graph two(4, {{1, 2}, {3, 4}});
  CHECK_FALSE(two.is_connected());
  CHECK_THROWS_AS(two.cut_vertices(), ValidationError);
  CHECK(Graph(1, {}).is_connected());
}

TEST_CASE("classify_deg3") {
  auto q3 = classify_deg3(fixtures::q3());
  CHECK(q3.max_degree == 3);
  CHECK_FALSE(q3.all_deg3_are_cut);
  CHECK(q3.noncut_deg3_witness == 1);

  // Two triangles joined by a path: the degree-3 vertices are the joints.
  Graph tt(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  auto r = classify_deg3(tt);
  CHECK(r.all_deg3_are_cut);
  CHECK_FALSE(r.noncut_deg3_witness);

  CHECK(classify_deg3(generate::complete(4)).noncut_deg3_witness == 1);
  CHECK(classify_deg3(generate::complete(5)).max_degree == 4);
}

TEST_CASE("generators") {
  CHECK(generate::complete(8).m() == 28);
  CHECK(generate::star(7).n() == 8);
  CHECK(generate::cycle(5).m() == 5);
  Graph rt = generate::ring_tree(3, 4, 2);
  CHECK(rt.n() == 14);
  CHECK(rt.m() == 16);
  CHECK(rt.max_degree() == 3);
  CHECK(classify_deg3(rt).all_deg3_are_cut);
  CHECK(generate::by_name("path", {3}) == generate::path(3));
  CHECK_THROWS_AS(generate::by_name("path", {}), ValidationError);
  CHECK_THROWS_AS(generate::by_name("petersen", {}), ValidationError);
}

// Oracle for the hypercube labeling: relabel the standard cube (vertices as
// 3-bit strings) in every way and keep the labelings on which B1, B2 and B3
// take the measures (4,48), (4,48), (5,49) and the edge ordering
// 12 13 34 35 56 57 78 ... is available, i.e. those seven edges exist.
TEST_CASE("hypercube labeling oracle") {
  std::set<std::vector<Edge>> labelings;
  std::array<int, 8> perm;
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<Edge> es;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        if (__builtin_popcount(a ^ b) == 1) es.emplace_back(perm[a], perm[b]);
    std::sort(es.begin(), es.end());
    labelings.insert(es);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(labelings.size() == 840);

  const std::vector<Edge> forced{{1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}, {7, 8}};
  std::vector<std::vector<Edge>> hits;
  for (const auto& es : labelings) {
    Graph g(8, es);
    if (!std::all_of(forced.begin(), forced.end(), [&](const Edge& e) { return g.has_edge(e.u, e.v); })) continue;
    auto m1 = measures(g, parse_tree(fixtures::b1));
    auto m2 = measures(g, parse_tree(fixtures::b2));
    auto m3 = measures(g, parse_tree(fixtures::b3));
    if (m1.alpha == 4 && m1.beta == 48 && m2.alpha == 4 && m2.beta == 48 && m3.alpha == 5 && m3.beta == 49)
      hits.push_back(es);
  }
  REQUIRE(hits.size() == 2);
  CHECK(hits.front() == fixtures::q3().edges());
}
