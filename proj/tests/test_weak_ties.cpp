#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "footnet/error.hpp"
#include "footnet/weak_ties.hpp"
#include "oracles.hpp"

using namespace footnet;
using testing::graph_from_edges;

namespace {

FootballGraph two_k4_with_bridge() {
  std::vector<std::tuple<int, int, Weight>> edges;
  for (int block = 0; block < 2; ++block)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edges.emplace_back(block * 4 + a, block * 4 + b, 3);
  edges.emplace_back(3, 4, 1);
  return graph_from_edges(8, edges);
}

std::vector<double> keys_of(const FootballGraph& g, TieKey key) {
  std::vector<double> keys;
  for (const auto& e : g.edges())
    keys.push_back(key == TieKey::Strength ? static_cast<double>(e.weight) : oracle::overlap(g, g.name(e.u), g.name(e.v)));
  return keys;
}

}  // namespace

TEST_CASE("neighbourhood overlap") {
  auto tri = graph_from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(neighborhood_overlap(tri, 0, 1) == doctest::Approx(1.0));
  auto path = graph_from_edges(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(neighborhood_overlap(path, 0, 1) == 0.0);
  auto lone = graph_from_edges(2, {{0, 1, 4}});
  CHECK(neighborhood_overlap(lone, 0, 1) == 0.0);
  CHECK_THROWS_AS(neighborhood_overlap(path, 0, 2), PreconditionError);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::random_graph(rng, 10, 0.4, 3);
    for (const auto& e : g.edges()) {
      double o = neighborhood_overlap(g, e.u, e.v);
      CHECK(o == doctest::Approx(oracle::overlap(g, g.name(e.u), g.name(e.v))).epsilon(1e-12));
      CHECK(o >= 0.0);
      CHECK(o <= 1.0);
      if (o == 1.0) {
        std::set<int> nu, nv;
        for (const auto& x : g.neighbors(e.u)) if (x.node != e.v) nu.insert(x.node);
        for (const auto& x : g.neighbors(e.v)) if (x.node != e.u) nv.insert(x.node);
        CHECK(nu == nv);
      }
    }
  }
}

TEST_CASE("edge annotations") {
  std::vector<CountryRecord> cs = {{"Austria", 47, 14, Continent::Europe, Confederation::UEFA},
                                   {"Germany", 51, 10, Continent::Europe, Confederation::UEFA},
                                   {"Brazil", -10, -55, Continent::SouthAmerica, Confederation::CONMEBOL}};
  std::vector<MatchRecord> ms = {testing::match("1998-01-01", "Austria", "Germany"),
                                 testing::match("1998-06-01", "Germany", "Austria", "World Cup qualification"),
                                 testing::match("1998-06-10", "Brazil", "Germany", "World Cup"),
                                 testing::match("1999-01-01", "Brazil", "Saarland"),
                                 testing::match("1990-06-10", "Austria", "Brazil", "World Cup"),
                                 testing::match("1999-02-01", "Austria", "Brazil")};
  const Date from = make_date(1995, 1, 1), to = make_date(2015, 12, 31);
  auto g = build_graph(ms, from, to);
  auto ann = annotate_edges(g, ms, cs);
  REQUIRE(ann.size() == g.num_edges());
  Weight total = 0;
  for (const auto& a : ann) {
    total += a.tie_strength;
    CHECK(a.u < a.v);
    if (a.u == "Austria" && a.v == "Germany") {
      CHECK(a.tie_strength == 2);
      CHECK_FALSE(a.cross_confederation);
      CHECK_FALSE(a.world_cup);
    }
    if (a.u == "Brazil" && a.v == "Germany") {
      CHECK(a.cross_confederation);
      CHECK(a.world_cup);
    }
    if (a.u == "Austria" && a.v == "Brazil") {
      CHECK(a.cross_confederation);
      CHECK_FALSE(a.world_cup);
    }
    if (a.v == "Saarland") CHECK_FALSE(a.cross_confederation);
  }
  CHECK(total == g.total_weight());
}

TEST_CASE("extreme order and boundary fractions") {
  std::vector<double> keys = {2, 1, 2, 3, 1};
  CHECK(extreme_order(keys, Side::Highest) == std::vector<std::size_t>{3, 0, 2, 1, 4});
  CHECK(extreme_order(keys, Side::Lowest) == std::vector<std::size_t>{1, 4, 0, 2, 3});

  std::vector<EdgeAnnotation> ann(6);
  for (std::size_t i = 0; i < ann.size(); ++i) {
    ann[i].tie_strength = static_cast<Weight>(i + 1);
    ann[i].overlap = 1.0 / static_cast<double>(i + 1);
    ann[i].cross_confederation = i < 2;
  }
  CHECK(boundary_fraction(ann, TieKey::Strength, 2, Side::Lowest) == 1.0);
  CHECK(boundary_fraction(ann, TieKey::Strength, 2, Side::Highest) == 0.0);
  CHECK(boundary_fraction(ann, TieKey::Overlap, 3, Side::Highest) == doctest::Approx(2.0 / 3.0));
  for (auto key : {TieKey::Strength, TieKey::Overlap}) {
    CHECK(boundary_fraction(ann, key, 6, Side::Highest) == boundary_fraction(ann, key, 6, Side::Lowest));
    CHECK(boundary_fraction(ann, key, 6, Side::Lowest) == doctest::Approx(2.0 / 6.0));
    // The top and bottom halves together count every cross edge once.
    double halves = boundary_fraction(ann, key, 3, Side::Highest) + boundary_fraction(ann, key, 3, Side::Lowest);
    CHECK(halves * 3 == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(boundary_fraction(ann, TieKey::Strength, 7, Side::Lowest), PreconditionError);
  CHECK_THROWS_AS(boundary_fraction(ann, TieKey::Strength, 0, Side::Lowest), PreconditionError);
}

TEST_CASE("bridge removal splits the giant component") {
  auto g = two_k4_with_bridge();
  CHECK(relative_giant_size(g) == 1.0);
  auto low = giant_component_curve(g, TieKey::Strength, Side::Lowest);
  REQUIRE(low.size() == g.num_edges());
  CHECK(low[0].removed == 1);
  CHECK(low[0].relative_size == doctest::Approx(0.5));
  CHECK(largest_step_drop(1.0, low) == doctest::Approx(0.5));
  auto high = giant_component_curve(g, TieKey::Strength, Side::Highest);
  CHECK(high[0].relative_size == 1.0);
  auto overlap_low = giant_component_curve(g, TieKey::Overlap, Side::Lowest);
  CHECK(overlap_low[0].relative_size == doctest::Approx(0.5));
  CHECK_THROWS_AS(giant_component_curve(graph_from_edges(3, {}), TieKey::Strength, Side::Lowest), PreconditionError);
}

TEST_CASE("incremental curve matches recomputation") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = testing::random_graph(rng, 12, 0.3, 4);
    if (g.num_edges() == 0) continue;
    for (auto key : {TieKey::Strength, TieKey::Overlap}) {
      for (auto side : {Side::Highest, Side::Lowest}) {
        auto curve = giant_component_curve(g, key, side);
        auto keys = keys_of(g, key);
        auto order = extreme_order(keys, side);
        auto bin = oracle::binary_adjacency(g);
        const int n = static_cast<int>(g.num_nodes());
        double previous = 1.0;
        for (std::size_t r = 0; r < curve.size(); ++r) {
          const auto& e = g.edges()[order[r]];
          bin[e.u][e.v] = bin[e.v][e.u] = 0;
          CHECK(curve[r].removed == r + 1);
          CHECK(curve[r].relative_size == doctest::Approx(oracle::relative_giant(bin, n)));
          CHECK(curve[r].relative_size <= previous);
          previous = curve[r].relative_size;
        }
        CHECK(curve.back().relative_size == doctest::Approx(1.0 / n));
      }
    }
  }
}
