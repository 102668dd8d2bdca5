#include "footnet/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

#include <fmt/format.h>

#include "footnet/error.hpp"
#include "parallel.hpp"

namespace footnet {

double correlation_to_similarity(double c) {
  constexpr double kSlack = 1e-12;
  if (!(std::abs(c) <= 1.0 + kSlack)) {
    throw PreconditionError(fmt::format("correlation {} is outside [-1, 1]", c));
  }
  return (std::clamp(c, -1.0, 1.0) + 1.0) / 2.0;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw PreconditionError("pearson: vectors differ in length");
  const auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
  };
  if (x.empty() || constant(x) || constant(y)) return 0.0;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

SimilarityMatrix row_similarity(const Eigen::MatrixXd& rows, std::vector<int> years) {
  const auto n = rows.rows();
  if (static_cast<std::size_t>(n) != years.size()) {
    throw PreconditionError("row count does not match the year list");
  }
  // Row-major copies so each row is a contiguous span.
  std::vector<std::vector<double>> data(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    data[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(rows.cols()));
    for (Eigen::Index j = 0; j < rows.cols(); ++j) data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rows(i, j);
  }
  SimilarityMatrix out{std::move(years), Eigen::MatrixXd::Identity(n, n)};
  detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j) {
      const double s = correlation_to_similarity(pearson(data[i], data[j]));
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
      out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s;
    }
  });
  return out;
}

Eigen::MatrixXd z_normalize_columns(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  if (m.rows() == 0) return out;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    auto col = m.col(c);
    if ((col.array() == col(0)).all()) continue;
    const double mean = col.mean();
    const double sd = std::sqrt((col.array() - mean).square().mean());
    out.col(c) = (col.array() - mean) / sd;
  }
  return out;
}

std::vector<int> years_of(std::span<const FootballGraph> yearly) {
  std::vector<int> years;
  years.reserve(yearly.size());
  for (const auto& g : yearly) years.push_back(year_of(g.horizon().from));
  return years;
}

Eigen::MatrixXd node_measure_matrix(std::span<const FootballGraph> yearly, NodeMeasure measure,
                                    const NodeUniverse& universe) {
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(yearly.size()),
                                               static_cast<Eigen::Index>(universe.size()));
  detail::parallel_for(yearly.size(), [&](std::size_t y) {
    auto v = node_measures(yearly[y], measure, universe);
    for (std::size_t j = 0; j < v.values.size(); ++j) {
      rows(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(j)) = v.values[j];
    }
  });
  return rows;
}

SimilarityMatrix node_level_matrix(std::span<const FootballGraph> yearly, NodeMeasure measure,
                                   const NodeUniverse& universe) {
  return row_similarity(node_measure_matrix(yearly, measure, universe), years_of(yearly));
}

Eigen::MatrixXd graph_feature_matrix(std::span<const FootballGraph> yearly) {
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(yearly.size()), 9);
  detail::parallel_for(yearly.size(), [&](std::size_t y) {
    auto f = graph_features(yearly[y]).values();
    for (std::size_t j = 0; j < f.size(); ++j) {
      rows(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(j)) = f[j];
    }
  });
  return rows;
}

SimilarityMatrix graph_level_matrix(std::span<const FootballGraph> yearly) {
  if (yearly.size() < 2) throw PreconditionError("graph-level similarity needs at least two graphs");
  return row_similarity(z_normalize_columns(graph_feature_matrix(yearly)), years_of(yearly));
}

namespace {

// Node and edge sets keyed by a shared name index, for fast intersections.
struct Footprint {
  std::vector<std::uint32_t> nodes;
  std::vector<std::uint64_t> edges;
};

std::vector<Footprint> footprints(std::span<const FootballGraph> graphs) {
  std::vector<std::string_view> names;
  for (const auto& g : graphs) names.insert(names.end(), g.nodes().begin(), g.nodes().end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<Footprint> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) {
    Footprint f;
    for (const auto& name : g.nodes()) {
      f.nodes.push_back(static_cast<std::uint32_t>(
          std::lower_bound(names.begin(), names.end(), name) - names.begin()));
    }
    // Node order is lexicographic in both, so ids stay sorted and u < v.
    for (const auto& e : g.edges()) {
      f.edges.push_back((std::uint64_t{f.nodes[static_cast<std::size_t>(e.u)]} << 32) |
                        f.nodes[static_cast<std::size_t>(e.v)]);
    }
    std::sort(f.edges.begin(), f.edges.end());
    out.push_back(std::move(f));
  }
  return out;
}

template <typename T>
std::size_t intersection_size(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t count = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double veo(const Footprint& a, const Footprint& b) {
  const double denom =
      static_cast<double>(a.nodes.size() + b.nodes.size() + a.edges.size() + b.edges.size());
  if (denom == 0.0) return 0.0;
  const double shared = static_cast<double>(intersection_size(a.nodes, b.nodes) +
                                            intersection_size(a.edges, b.edges));
  return 2.0 * shared / denom;
}

}  // namespace

double veo_similarity(const FootballGraph& a, const FootballGraph& b) {
  const FootballGraph pair[] = {a, b};
  auto f = footprints(pair);
  return veo(f[0], f[1]);
}

SimilarityMatrix veo_matrix(std::span<const FootballGraph> yearly) {
  auto f = footprints(yearly);
  const auto n = static_cast<Eigen::Index>(yearly.size());
  SimilarityMatrix out{years_of(yearly), Eigen::MatrixXd::Identity(n, n)};
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const double s = veo(f[i], f[j]);
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
      out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s;
    }
  }
  return out;
}

SimilarityMatrix final_matrix(std::span<const SimilarityMatrix> components) {
  if (components.empty()) throw PreconditionError("final_matrix needs at least one component");
  SimilarityMatrix out = components.front();
  for (std::size_t i = 1; i < components.size(); ++i) {
    if (components[i].years != out.years) {
      throw PreconditionError("similarity matrices cover different years");
    }
    out.values += components[i].values;
  }
  out.values /= static_cast<double>(components.size());
  return out;
}

std::vector<TemporalState> extract_states(const SimilarityMatrix& final, std::uint64_t seed,
                                          Partition* partition) {
  const auto n = final.values.rows();
  std::vector<WeightedEdge> edges;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<int>(i), static_cast<int>(j), final.values(i, j)});
    }
  }
  Partition p = louvain(WeightedGraph(static_cast<std::size_t>(n), edges), seed);
  // Canonical labels already follow first appearance, i.e. earliest year.
  std::vector<TemporalState> states(static_cast<std::size_t>(p.num_communities()));
  for (std::size_t i = 0; i < p.assignment.size(); ++i) {
    auto& s = states[static_cast<std::size_t>(p.assignment[i])];
    s.label = p.assignment[i];
    s.years.push_back(final.years[i]);
  }
  for (auto& s : states) std::sort(s.years.begin(), s.years.end());
  std::sort(states.begin(), states.end(), [](const TemporalState& a, const TemporalState& b) {
    return a.years.front() < b.years.front();
  });
  for (std::size_t i = 0; i < states.size(); ++i) states[i].label = static_cast<int>(i);
  if (partition) *partition = std::move(p);
  return states;
}

}  // namespace footnet
