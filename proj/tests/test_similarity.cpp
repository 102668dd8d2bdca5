#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "footnet/error.hpp"
#include "footnet/similarity.hpp"
#include "oracles.hpp"

using namespace footnet;

namespace {

FootballGraph year_graph(int year, const std::vector<std::tuple<std::string, std::string, int>>& edges) {
  auto ms = testing::matches_for(edges, make_date(year, 6, 1));
  return build_graph(ms, make_date(year, 1, 1), make_date(year, 12, 31));
}

FootballGraph empty_year(int year) { return build_graph({}, make_date(year, 1, 1), make_date(year, 12, 31)); }

void check_similarity_shape(const SimilarityMatrix& s) {
  const auto n = s.values.rows();
  REQUIRE(s.values.cols() == n);
  REQUIRE(static_cast<Eigen::Index>(s.years.size()) == n);
  for (Eigen::Index i = 0; i < n; ++i) {
    CHECK(s.values(i, i) == 1.0);
    for (Eigen::Index j = 0; j < n; ++j) {
      CHECK(s.values(i, j) == s.values(j, i));
      CHECK(s.values(i, j) >= 0.0);
      CHECK(s.values(i, j) <= 1.0);
    }
  }
}

std::vector<FootballGraph> random_years(std::mt19937_64& rng, int count, int teams) {
  std::vector<FootballGraph> ys;
  std::bernoulli_distribution edge(0.35);
  std::uniform_int_distribution<int> weight(1, 4);
  for (int y = 0; y < count; ++y) {
    std::vector<std::tuple<std::string, std::string, int>> es;
    for (int a = 0; a < teams; ++a)
      for (int b = a + 1; b < teams; ++b)
        if (edge(rng)) es.emplace_back(testing::team_name(a), testing::team_name(b), weight(rng));
    ys.push_back(year_graph(2000 + y, es));
  }
  return ys;
}

}  // namespace

TEST_CASE("correlation to similarity") {
  CHECK(correlation_to_similarity(1.0) == 1.0);
  CHECK(correlation_to_similarity(-1.0) == 0.0);
  CHECK(correlation_to_similarity(0.0) == 0.5);
  CHECK(correlation_to_similarity(1.0 + 1e-13) == 1.0);
  CHECK_THROWS_AS(correlation_to_similarity(1.1), PreconditionError);
  std::vector<double> c = {2, 2, 2}, x = {1, 2, 3};
  CHECK(pearson(c, x) == 0.0);
}

TEST_CASE("node-level similarity") {
  auto g = year_graph(2000, {{"A", "B", 2}, {"B", "C", 1}});
  auto g2 = year_graph(2001, {{"A", "B", 2}, {"B", "C", 1}});
  NodeUniverse universe({"A", "B", "C", "D"});
  std::vector<FootballGraph> same = {g, g2};
  auto s = node_level_matrix(same, NodeMeasure::Degree, universe);
  CHECK(s.years == std::vector<int>{2000, 2001});
  CHECK(s.values(0, 1) == doctest::Approx(1.0));

  std::vector<FootballGraph> with_empty = {g, empty_year(2001)};
  CHECK(node_level_matrix(with_empty, NodeMeasure::Degree, universe).values(0, 1) == 0.5);

  std::mt19937_64 rng(61);
  auto ys = random_years(rng, 3, 6);
  std::vector<TeamId> names;
  for (int i = 0; i < 7; ++i) names.push_back(testing::team_name(i));
  NodeUniverse u(names);
  for (auto measure : {NodeMeasure::Degree, NodeMeasure::BinaryDegree, NodeMeasure::ClusteringCoefficient,
                       NodeMeasure::Closeness, NodeMeasure::LocalEfficiency}) {
    auto m = node_level_matrix(ys, measure, u);
    check_similarity_shape(m);
    std::vector<std::vector<double>> rows;
    for (const auto& y : ys) {
      std::vector<double> r(u.size(), 0.0);
      auto bin = oracle::binary_adjacency(y);
      auto dense = oracle::dense_adjacency(y);
      for (std::size_t i = 0; i < y.num_nodes(); ++i) {
        const int k = static_cast<int>(i);
        double v = 0;
        switch (measure) {
          case NodeMeasure::Degree: for (double w : dense[i]) v += w; break;
          case NodeMeasure::BinaryDegree: for (double w : bin[i]) v += w; break;
          case NodeMeasure::ClusteringCoefficient: v = oracle::clustering(bin, k); break;
          case NodeMeasure::Closeness: v = oracle::closeness(bin, k); break;
          case NodeMeasure::LocalEfficiency: v = oracle::local_efficiency(bin, k); break;
        }
        r[static_cast<std::size_t>(*u.index_of(y.name(k)))] = v;
      }
      rows.push_back(r);
    }
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) CHECK(m.values(a, b) == doctest::Approx((oracle::pearson(rows[a], rows[b]) + 1) / 2).epsilon(1e-12));
  }
}

TEST_CASE("node-level similarity ignores team names") {
  std::mt19937_64 rng(62);
  auto ys = random_years(rng, 4, 6);
  std::vector<TeamId> names;
  for (int i = 0; i < 6; ++i) names.push_back(testing::team_name(i));
  // Relabel T00..T05 to a reversed-order set of names.
  std::vector<FootballGraph> renamed;
  for (const auto& y : ys) {
    std::vector<std::tuple<std::string, std::string, int>> es;
    for (const auto& e : y.edges()) {
      es.emplace_back("Z" + std::to_string(9 - std::stoi(y.name(e.u).substr(1))),
                      "Z" + std::to_string(9 - std::stoi(y.name(e.v).substr(1))), static_cast<int>(e.weight));
    }
    renamed.push_back(year_graph(y.horizon().from.year().operator int(), es));
  }
  std::vector<TeamId> znames;
  for (int i = 4; i <= 9; ++i) znames.push_back("Z" + std::to_string(i));
  auto a = node_level_matrix(ys, NodeMeasure::Closeness, NodeUniverse(names));
  auto b = node_level_matrix(renamed, NodeMeasure::Closeness, NodeUniverse(znames));
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("graph-level similarity") {
  auto g = year_graph(2000, {{"A", "B", 1}, {"B", "C", 1}});
  std::vector<FootballGraph> dup = {g, g};
  CHECK(graph_level_matrix(dup).values(0, 1) == 0.5);
  std::vector<FootballGraph> one = {g};
  CHECK_THROWS_AS(graph_level_matrix(one), PreconditionError);

  std::vector<FootballGraph> ys = {year_graph(2000, {{"A", "B", 1}}),
                                   year_graph(2001, {{"A", "B", 1}, {"B", "C", 2}, {"A", "C", 1}}),
                                   year_graph(2002, {{"A", "B", 1}, {"B", "C", 1}, {"C", "D", 1}}),
                                   year_graph(2003, {{"A", "B", 1}, {"C", "D", 1}, {"A", "C", 1}, {"E", "F", 1}})};
  std::vector<std::vector<double>> feats;
  for (const auto& y : ys) {
    auto bin = oracle::binary_adjacency(y);
    const double n = static_cast<double>(y.num_nodes()), m = static_cast<double>(y.num_edges());
    auto [d, r] = oracle::diameter_radius(bin);
    feats.push_back({n, m, oracle::average_path_length(bin), oracle::efficiency(bin), static_cast<double>(d),
                     static_cast<double>(r), graph_energy(y), 2 * m / (n * (n - 1)), oracle::transitivity(bin)});
  }
  for (std::size_t f = 0; f < 9; ++f) {
    double mean = 0, var = 0;
    for (const auto& row : feats) mean += row[f] / 4;
    for (const auto& row : feats) var += (row[f] - mean) * (row[f] - mean) / 4;
    for (auto& row : feats) row[f] = var > 0 ? (row[f] - mean) / std::sqrt(var) : 0.0;
  }
  auto s = graph_level_matrix(ys);
  check_similarity_shape(s);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) CHECK(s.values(a, b) == doctest::Approx((oracle::pearson(feats[a], feats[b]) + 1) / 2).epsilon(1e-10));

  Eigen::MatrixXd m(3, 2);
  m << 1, 5, 2, 5, 3, 5;
  auto z = z_normalize_columns(m);
  CHECK(z(0, 0) == doctest::Approx(-std::sqrt(1.5)));
  CHECK(z.col(1).cwiseAbs().sum() == 0.0);
}

TEST_CASE("vertex-edge overlap") {
  auto tri = year_graph(2000, {{"A", "B", 1}, {"B", "C", 1}, {"A", "C", 1}});
  auto edge = year_graph(2001, {{"A", "B", 5}});
  CHECK(veo_similarity(tri, edge) == doctest::Approx(6.0 / 9.0));
  CHECK(veo_similarity(tri, tri) == 1.0);
  auto far = year_graph(2002, {{"X", "Y", 1}});
  CHECK(veo_similarity(edge, far) == 0.0);
  std::vector<FootballGraph> empties = {empty_year(2000), empty_year(2001)};
  auto e = veo_matrix(empties);
  CHECK(e.values(0, 1) == 0.0);
  CHECK(e.values(0, 0) == 1.0);

  std::mt19937_64 rng(63);
  auto ys = random_years(rng, 6, 7);
  auto v = veo_matrix(ys);
  check_similarity_shape(v);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (a != b) CHECK(v.values(a, b) == doctest::Approx(oracle::veo(ys[a], ys[b])).epsilon(1e-12));
}

TEST_CASE("final matrix") {
  SimilarityMatrix ones{{2000, 2001}, Eigen::MatrixXd::Ones(2, 2)};
  SimilarityMatrix zeros{{2000, 2001}, Eigen::MatrixXd::Identity(2, 2)};
  std::vector<SimilarityMatrix> both = {ones, zeros};
  CHECK(final_matrix(both).values(0, 1) == 0.5);
  std::vector<SimilarityMatrix> same = {ones, ones};
  CHECK(final_matrix(same).values == ones.values);
  SimilarityMatrix other{{1999, 2000}, Eigen::MatrixXd::Ones(2, 2)};
  std::vector<SimilarityMatrix> mixed = {ones, other};
  CHECK_THROWS_AS(final_matrix(mixed), PreconditionError);
  CHECK_THROWS_AS(final_matrix(std::vector<SimilarityMatrix>{}), PreconditionError);

  std::vector<SimilarityMatrix> raised = {ones, zeros};
  raised[1].values(0, 1) = raised[1].values(1, 0) = 0.3;
  CHECK(final_matrix(raised).values(0, 1) > final_matrix(both).values(0, 1));
}

TEST_CASE("temporal states") {
  const int n = 10;
  SimilarityMatrix block{{}, Eigen::MatrixXd::Constant(n, n, 0.1)};
  for (int i = 0; i < n; ++i) block.years.push_back(1950 + i);
  block.values.topLeftCorner(4, 4).setConstant(0.9);
  block.values.bottomRightCorner(6, 6).setConstant(0.9);
  block.values.diagonal().setOnes();
  Partition p;
  auto states = extract_states(block, 42, &p);
  REQUIRE(states.size() == 2);
  CHECK(states[0].label == 0);
  CHECK(states[0].years == std::vector<int>{1950, 1951, 1952, 1953});
  CHECK(states[1].years.front() == 1954);

  // The two-block split is also the best of all two-way splits.
  oracle::Dense w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = i == j ? 0.0 : block.values(i, j);
  double found = oracle::modularity(w, p.assignment);
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> split(n);
    for (int i = 0; i < n; ++i) split[i] = (mask >> i) & 1;
    CHECK(oracle::modularity(w, split) <= found + 1e-12);
  }

  SimilarityMatrix flat{block.years, Eigen::MatrixXd::Constant(n, n, 0.7)};
  flat.values.diagonal().setOnes();
  CHECK(extract_states(flat, 42).size() == 1);

  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    SimilarityMatrix r{block.years, Eigen::MatrixXd::Identity(n, n)};
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) r.values(i, j) = r.values(j, i) = u(rng);
    auto st = extract_states(r, 1);
    std::vector<int> all;
    int previous_first = 0;
    for (std::size_t s = 0; s < st.size(); ++s) {
      CHECK(st[s].label == static_cast<int>(s));
      CHECK(std::is_sorted(st[s].years.begin(), st[s].years.end()));
      CHECK(st[s].years.front() > previous_first);
      previous_first = st[s].years.front();
      all.insert(all.end(), st[s].years.begin(), st[s].years.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == block.years);
  }
}
