#include "reasm/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "reasm/enumerate.hpp"
#include "reasm/error.hpp"
#include "reasm/fixtures.hpp"
#include "reasm/reduction.hpp"
#include "reasm/sequential.hpp"
#include "reasm/solvers.hpp"

namespace reasm::verify {

namespace {

// Counts cases and keeps the first counterexample.
class Tally {
public:
  Tally(std::string suite, std::string name) : suite_(std::move(suite)), name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = describe();
  }

  Check finish() const {
    std::string detail = std::to_string(cases_) + " cases";
    if (failures_) detail += ", " + std::to_string(failures_) + " failed; first: " + first_;
    return {suite_, name_, failures_ == 0 && cases_ > 0, detail};
  }

private:
  std::string suite_, name_;
  long long cases_ = 0, failures_ = 0;
  std::string first_;
};

void for_each_connected(int max_n, const std::function<void(const Graph&)>& f) {
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : enumerate::connected_graphs(n)) f(g);
}

std::string graph_tag(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + " E=";
  for (const Edge& e : g.edges()) s += e.to_string();
  return s;
}

std::vector<Check> beta_equals_gamma(const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  Tally t("beta_equals_gamma", "beta(G,phi) = gamma(G,phi)");
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  for (int i = 0; i < 1000; ++i) {
    const int n = size(rng);
    Graph g = i % 2 ? enumerate::random_graph(n, density(rng), rng)
                    : enumerate::random_connected_graph(n, density(rng) / 2, rng);
    LinearArrangement phi = enumerate::random_arrangement(n, rng);
    bool ok = true;
    long long beta = 0, gamma = 0;
    try {
      auto r = evaluate_arrangement(g, phi);
      beta = r.beta, gamma = r.gamma;
      ok = beta == gamma;
    } catch (const std::logic_error&) {
      ok = false;
    }
    t.expect(ok, [&] { return graph_tag(g) + " phi=" + phi.to_text(); });
  }
  return {t.finish()};
}

std::vector<Check> roundtrips(const Options& opts) {
  Tally round("roundtrips", "induce_reassembling(induce_arrangement(L)) = L");
  Tally identity("roundtrips", "beta(L) - beta(phi) = sum of degrees except the first vertex");
  Tally alpha("roundtrips", "alpha(L) = max(max degree, alpha(phi))");
  for_each_connected(opts.max_n, [&](const Graph& g) {
    enumerate::for_each_linear_tree(g.n(), [&](const ReassemblyTree& l) {
      LinearArrangement phi = induce_arrangement(g, l);
      round.expect(induce_reassembling(g, phi) == l, [&] { return graph_tag(g) + " L=" + l.to_text(); });
      auto ml = measures(g, l);
      auto ma = evaluate_arrangement(g, phi);
      identity.expect(ml.beta - ma.beta == g.degree_sum() - g.degree(phi.at(1)),
                      [&] { return graph_tag(g) + " L=" + l.to_text(); });
      alpha.expect(ml.alpha == std::max(g.max_degree(), ma.alpha), [&] { return graph_tag(g) + " L=" + l.to_text(); });
    });
  });
  return {round.finish(), identity.finish(), alpha.finish()};
}

std::vector<Check> bin_can(const Options& opts) {
  Tally inverse("bin_can", "bin(G, can(G,B)) = B for strict B");
  Tally chain("bin_can", "seq_reassemble(chain_to_ordering(chain)) reproduces the chain");
  Tally stable("bin_can", "bin(G, can(G, bin(G,pi))) = bin(G,pi)");
  std::mt19937_64 rng(opts.seed);
  for_each_connected(opts.max_n, [&](const Graph& g) {
    enumerate::for_each_strict_tree(g, [&](const ReassemblyTree& b) {
      inverse.expect(bin(g, canonical_ordering(g, b)) == b, [&] { return graph_tag(g) + " B=" + b.to_text(); });
      PartitionChain c = tree_chain(b);
      chain.expect(seq_reassemble(g, chain_to_ordering(g, c)).chain == c,
                   [&] { return graph_tag(g) + " B=" + b.to_text(); });
    });
    EdgeOrdering pi = g.edges();
    for (int k = 0; k < 5 && !pi.empty(); ++k) {
      std::shuffle(pi.begin(), pi.end(), rng);
      ReassemblyTree b = bin(g, pi);
      stable.expect(bin(g, canonical_ordering(g, b)) == b, [&] { return graph_tag(g) + " pi=" + ordering_to_text(pi); });
    }
  });
  return {inverse.finish(), chain.finish(), stable.finish()};
}

// Orders of V_w with U kept increasing (U vertices are interchangeable).
void for_each_aux_order(const AuxiliaryGraph& a, const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> tokens;
  for (Vertex v = 1; v <= a.n(); ++v) tokens.push_back(v);
  tokens.insert(tokens.end(), a.p, 0);
  std::sort(tokens.begin(), tokens.end());
  std::vector<Vertex> order(tokens.size());
  do {
    Vertex next_u = a.n() + 1;
    for (std::size_t i = 0; i < tokens.size(); ++i) order[i] = tokens[i] ? tokens[i] : next_u++;
    f(order);
  } while (std::next_permutation(tokens.begin(), tokens.end()));
}

std::vector<Check> balance(const Options&) {
  Tally optimal("balance", "beta-optimal orders have scatter 0 and unbalance 0");
  Tally descatter("balance", "descatter_move strictly decreases beta");
  Tally normalize("balance", "normalize_sequence never increases beta");
  Tally shape("balance", "normalize_sequence output is unscattered and right-balanced");
  for_each_connected(4, [&](const Graph& g) {
    if (g.n() + g.degree_sum() > 10) return;
    for (Vertex w = 1; w <= g.n(); ++w) {
      AuxiliaryGraph a = build_auxiliary(g, w);
      std::vector<VCSequence> all;
      long long best = -1;
      for_each_aux_order(a, [&](const std::vector<Vertex>& order) {
        VCSequence s = vc_sequence(a, order);
        if (best < 0 || s.beta() < best) best = s.beta();
        all.push_back(std::move(s));
      });
      for (const VCSequence& s : all) {
        auto tag = [&] { return graph_tag(g) + " w=" + std::to_string(w) + " " + LinearArrangement(s.order).to_text(); };
        if (s.beta() == best) optimal.expect(scatter(a, s) == 0 && unbalance(a, s) == 0, tag);
        if (scatter(a, s) > 0) descatter.expect(descatter_move(a, s).beta() < s.beta(), tag);
        VCSequence nrm = normalize_sequence(a, s);
        normalize.expect(nrm.beta() <= s.beta(), tag);
        shape.expect(scatter(a, nrm) == 0 && right_balanced(a, nrm), tag);
      }
    }
  });
  return {optimal.finish(), descatter.finish(), normalize.finish(), shape.finish()};
}

std::vector<Check> dp_vs_brute(const Options& opts) {
  Tally free_value("dp_vs_brute", "free optimum: DP = n! scan, same lex-least witness");
  Tally anchored("dp_vs_brute", "anchored optimum: DP = n! scan (or both infeasible)");
  Tally linear("dp_vs_brute", "linear reassembling DP = scan over all linear trees");
  Tally witness("dp_vs_brute", "witness evaluates to the reported value");
  for_each_connected(opts.max_n, [&](const Graph& g) {
    for (Objective obj : {Objective::alpha, Objective::beta}) {
      auto tag = [&] { return graph_tag(g) + " " + to_string(obj); };
      SolveResult dp = exact_arrangement(g, obj);
      SolveResult bf = brute_force_arrangement(g, obj);
      free_value.expect(dp.value == bf.value && dp.arrangement == bf.arrangement, tag);
      auto ev = evaluate_arrangement(g, *dp.arrangement);
      witness.expect((obj == Objective::beta ? ev.beta : ev.alpha) == dp.value, tag);
      for (Vertex w = 1; w <= g.n(); ++w) {
        long long a = -1, b = -1;
        try {
          a = exact_arrangement(g, obj, w).value;
        } catch (const InfeasibleError&) {
        }
        try {
          b = brute_force_arrangement(g, obj, w).value;
        } catch (const InfeasibleError&) {
        }
        anchored.expect(a == b, [&] { return tag() + " w=" + std::to_string(w); });
      }
      long long scan = -1;
      enumerate::for_each_linear_tree(g.n(), [&](const ReassemblyTree& l) {
        auto m = measures(g, l);
        long long v = obj == Objective::beta ? m.beta : m.alpha;
        if (scan < 0 || v < scan) scan = v;
      });
      SolveResult lin = exact_linear_reassembling(g, obj);
      auto ml = measures(g, *lin.tree);
      linear.expect(lin.value == scan && (obj == Objective::beta ? ml.beta : ml.alpha) == lin.value, tag);
    }
  });
  return {free_value.finish(), anchored.finish(), linear.finish(), witness.finish()};
}

std::vector<Check> fixture_values(const Options&) {
  std::vector<Check> out;
  auto tree_check = [&](const std::string& gname, const Graph& g, const char* tname, std::string_view text,
                        int alpha, long long beta) {
    auto m = measures(g, parse_tree(text));
    out.push_back({"fixtures", "alpha(" + gname + "," + tname + ")", m.alpha == alpha,
                   std::to_string(m.alpha) + " (expected " + std::to_string(alpha) + ")"});
    out.push_back({"fixtures", "beta(" + gname + "," + tname + ")", m.beta == beta,
                   std::to_string(m.beta) + " (expected " + std::to_string(beta) + ")"});
  };
  auto arr_check = [&](const char* name, std::string_view text, int alpha, long long beta) {
    auto r = evaluate_arrangement(fixtures::s7(), parse_arrangement(text));
    out.push_back({"fixtures", std::string("alpha(S7,") + name + ")", r.alpha == alpha,
                   std::to_string(r.alpha) + " (expected " + std::to_string(alpha) + ")"});
    out.push_back({"fixtures", std::string("beta(S7,") + name + ")", r.beta == beta,
                   std::to_string(r.beta) + " (expected " + std::to_string(beta) + ")"});
  };
  const Graph q3 = fixtures::q3(), k8 = fixtures::k8(), s7 = fixtures::s7();
  tree_check("Q3", q3, "B1", fixtures::b1, 4, 48);
  tree_check("Q3", q3, "B2", fixtures::b2, 4, 48);
  tree_check("Q3", q3, "B3", fixtures::b3, 5, 49);
  tree_check("K8", k8, "B1", fixtures::b1, 16, 132);
  tree_check("K8", k8, "B2", fixtures::b2, 16, 136);
  tree_check("K8", k8, "B3", fixtures::b3, 16, 133);
  out.push_back({"fixtures", "beta(K8,B4)", measures(k8, parse_tree(fixtures::b4)).beta == 127,
                 std::to_string(measures(k8, parse_tree(fixtures::b4)).beta) + " (expected 127)"});
  tree_check("S7", s7, "B1", fixtures::b1, 7, 32);
  tree_check("S7", s7, "B2", fixtures::b2, 7, 34);
  tree_check("S7", s7, "B3", fixtures::b3, 7, 35);
  tree_check("S7", s7, "B4", fixtures::b4, 7, 31);
  out.push_back({"fixtures", "beta(S7,B5)", measures(s7, parse_tree(fixtures::b5)).beta == 29,
                 std::to_string(measures(s7, parse_tree(fixtures::b5)).beta) + " (expected 29)"});
  arr_check("phi3", fixtures::phi3, 6, 22);
  arr_check("phi5", fixtures::phi5, 4, 16);
  arr_check("phi3'", fixtures::phi3_prime, 7, 28);
  return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"beta_equals_gamma", "roundtrips",  "bin_can",
                                              "balance",    "dp_vs_brute", "fixtures"};
  return names;
}

std::vector<Check> run_suite(std::string_view name, const Options& opts) {
  if (opts.max_n < 1 || opts.max_n > 7) throw ValidationError("max_n must be in 1..7");
  if (name == "beta_equals_gamma") return beta_equals_gamma(opts);
  if (name == "roundtrips") return roundtrips(opts);
  if (name == "bin_can") return bin_can(opts);
  if (name == "balance") return balance(opts);
  if (name == "dp_vs_brute") return dp_vs_brute(opts);
  if (name == "fixtures") return fixture_values(opts);
  throw ValidationError("unknown suite '" + std::string(name) + "'");
}

} // namespace reasm::verify
