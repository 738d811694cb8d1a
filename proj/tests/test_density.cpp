#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "strongcommon/density.hpp"

using namespace strongcommon;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Graph> graphs_up_to(int max_n) {
  std::vector<Graph> all;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs(n);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("up_kernel") {
  StepKernel up = up_kernel();
  CHECK(up.blocks() == 2);
  CHECK(up.entry(0, 0) == Polynomial({-1, 2}));
  CHECK(up.entry(1, 1) == Polynomial({-1, 2}));
  CHECK(up.entry(0, 1) == Polynomial::constant(-1));
  CHECK(up.measures() == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(up.measures()[0] + up.measures()[1] == 1);
  CHECK_FALSE(up.is_constant());
}

TEST_CASE("step kernel validation") {
  CHECK_THROWS_AS(constant_kernel({q(1, 2), q(1, 3)}, {{0, 0}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(constant_kernel({q(1), q(0)}, {{0, 0}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(constant_kernel({q(1, 2), q(1, 2)}, {{0, 1}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(constant_kernel({q(1, 2), q(1, 2)}, {{0, 1}}), PreconditionError);
  StepKernel w = constant_kernel({q(1, 3), q(2, 3)}, {{q(1, 4), q(1)}, {q(1), 0}});
  CHECK(w.complement().constant_entry(0, 0) == q(3, 4));
  CHECK(w.signed_version().constant_entry(0, 0) == q(-1, 2));
}

TEST_CASE("hom_density") {
  StepKernel up = up_kernel();
  CHECK(hom_density(named::complete(2), up) == p_minus_one());
  CHECK(hom_density(named::complete(3), up) == Polynomial({-1, 3, -3, 2}));
  CHECK(hom_density(named::path(2), up) == Polynomial({1, -2, 1}));
  CHECK(hom_density(Graph(5), up) == Polynomial::constant(1));
  CHECK(hom_density(Graph(3), constant_kernel({q(1, 3), q(2, 3)}, {{0, 1}, {1, 0}})) == Polynomial::constant(1));
  CHECK(hom_density_up(named::paw()) == Polynomial({1, -4, 6, -5, 2}));
  CHECK_THROWS_AS(hom_density_up(Graph(25)), BudgetExceeded);
  CHECK_THROWS_AS(hom_density(Graph(16, {{0, 1}}), constant_kernel({q(1, 3), q(1, 3), q(1, 3)},
                                                                   {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})),
                  BudgetExceeded);
  CHECK_NOTHROW(hom_density_up(Graph(20, {{0, 1}}), std::uint64_t{1} << 20));
}

TEST_CASE("histogram engine equals the generic polynomial path") {
  for (const auto& g : graphs_up_to(5)) {
    CHECK(hom_density_up(g) == hom_density_generic(g, up_kernel()));
  }
}

TEST_CASE("monochromatic histogram counts every assignment once") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 10, 0.4);
    auto counts = monochromatic_histogram(g);
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == (std::uint64_t{1} << g.n()));
    // All vertices in one block: every edge is monochromatic.
    CHECK(counts[static_cast<std::size_t>(g.m())] >= 2);
  }
}

TEST_CASE("restricted_densities") {
  auto cherry = restricted_densities(named::cherry(), 0, 1);
  CHECK(cherry.f == Polynomial({q(1, 4), q(-1, 2), q(1, 2)}));
  CHECK(cherry.g == Polynomial({q(1, 4), q(-1, 2)}));
  CHECK(cherry.f * Rational(2) + cherry.g * Rational(2) == hom_density_up(named::path(2)));
  CHECK_THROWS_AS(restricted_densities(named::paw(), 0, 1), PreconditionError);
  CHECK_THROWS_AS(restricted_densities(named::paw(), 0, 4), PreconditionError);
  CHECK_THROWS_AS(restricted_densities(named::paw(), 3, 3), PreconditionError);
}

TEST_CASE("restricted densities: pair identity, constant term and block symmetry") {
  for (const auto& g : graphs_up_to(6)) {
    const Polynomial t = hom_density_up(g);
    const Rational sign = g.m() % 2 == 0 ? 1 : -1;
    for (int a = 0; a < g.n(); ++a) {
      for (int b = a + 1; b < g.n(); ++b) {
        if (g.adjacent(a, b)) continue;
        auto pair = restricted_densities(g, a, b);
        CHECK(pair.f * Rational(2) + pair.g * Rational(2) == t);
        CHECK(pair.f.coeff(0) == sign / 4);
        CHECK(pair.f.degree() <= g.m());
        CHECK(pair.g.degree() <= g.m());
        CHECK(pinned_density(g, a, b, 1, 1) == pair.f);
        CHECK(pinned_density(g, a, b, 1, 0) == pair.g);
      }
    }
  }
}

TEST_CASE("hom_density_recurrence") {
  CHECK(hom_density_recurrence(named::complete(2)) == p_minus_one());
  CHECK(hom_density_recurrence(named::paw()) == Polynomial({-1, 3, -3, 2}) * p_minus_one());
  CHECK(hom_density_recurrence(Graph(4)) == Polynomial::constant(1));
  // 4p * f_{a,b,empty} - 1 with f = 1/4
  CHECK(restricted_densities(Graph(2), 0, 1).f == Polynomial::constant(q(1, 4)));
}

TEST_CASE("direct and recurrence engines agree on all graphs with at most 6 vertices") {
  RecurrenceEngine engine;
  int checked = 0;
  for (const auto& g : graphs_up_to(6)) {
    CHECK(hom_density_up(g) == engine.density(g));
    ++checked;
  }
  CHECK(checked == 1 + 2 + 4 + 11 + 34 + 156);
  CHECK(engine.memo_size() > 0);
}

TEST_CASE("recurrence memo is safe under concurrent use") {
  RecurrenceEngine engine;
  auto graphs = enumerate_graphs(6);
  std::vector<std::vector<Polynomial>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] {
      for (const auto& g : graphs) results[t].push_back(engine.density(g));
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t t = 1; t < results.size(); ++t) CHECK(results[t][i] == results[0][i]);
    CHECK(results[0][i] == hom_density_up(graphs[i]));
  }
}

TEST_CASE("density invariants") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 7, 0.5);
    Polynomial t = hom_density_up(g);
    CHECK(hom_density_up(g.with_isolated_vertices(1 + trial % 3)) == t);
    CHECK(t.degree() <= g.m());
    Polynomial scaled = t * pow2(g.n());
    for (const auto& c : scaled.coeffs()) CHECK(c.get_den() == 1);
    Graph h = random_graph(rng, 1 + trial % 4, 0.6);
    CHECK(hom_density_up(disjoint_union(g, h)) == t * hom_density_up(h));
  }
}

TEST_CASE("closed forms for cycles and paths") {
  for (int k = 3; k <= 8; ++k) {
    CHECK(hom_density_up(named::cycle(k)) ==
          pow(p_minus_one(), static_cast<unsigned>(k)) + Polynomial::monomial(1, static_cast<std::size_t>(k)));
  }
  for (int k = 1; k <= 8; ++k) {
    CHECK(hom_density_up(named::path(k)) == pow(p_minus_one(), static_cast<unsigned>(k)));
  }
}

TEST_CASE("UpDensityCache memoizes by canonical form") {
  UpDensityCache cache;
  Graph paw_a = named::paw();
  Graph paw_b(5, {{1, 2}, {1, 3}, {2, 3}, {3, 0}});
  CHECK(cache.density(paw_a) == hom_density_up(paw_a));
  CHECK(cache.density(paw_b) == hom_density_up(paw_a));
  CHECK(cache.size() == 1);
}
