#include "footnet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include <Eigen/Eigenvalues>

#include "footnet/error.hpp"
#include "parallel.hpp"

namespace footnet {

namespace {

using AdjList = std::vector<std::vector<int>>;

AdjList unweighted_lists(const FootballGraph& g) {
  AdjList adj(g.num_nodes());
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    for (const auto& nb : g.neighbors(static_cast<int>(i))) adj[i].push_back(nb.node);
  }
  return adj;
}

void bfs(const AdjList& adj, int source, std::vector<int>& dist, std::vector<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
}

double efficiency(const AdjList& adj) {
  const std::size_t n = adj.size();
  if (n <= 1) return 0.0;
  std::vector<int> dist(n), queue;
  double sum = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    bfs(adj, static_cast<int>(s), dist, queue);
    for (std::size_t t = 0; t < n; ++t) {
      if (t != s && dist[t] > 0) sum += 1.0 / dist[t];
    }
  }
  return sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::size_t triangles_at(const FootballGraph& g, int node) {
  auto nbs = g.neighbors(node);
  std::size_t count = 0;
  for (std::size_t a = 0; a < nbs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbs.size(); ++b) {
      if (g.has_edge(nbs[a].node, nbs[b].node)) ++count;
    }
  }
  return count;
}

double clustering(const FootballGraph& g, int node) {
  const double k = static_cast<double>(g.degree(node));
  if (k < 2) return 0.0;
  return static_cast<double>(triangles_at(g, node)) / (k * (k - 1) / 2.0);
}

double local_efficiency(const FootballGraph& g, int node) {
  auto nbs = g.neighbors(node);
  if (nbs.size() < 2) return 0.0;
  std::vector<int> local(g.num_nodes(), -1);
  for (std::size_t i = 0; i < nbs.size(); ++i) local[static_cast<std::size_t>(nbs[i].node)] = static_cast<int>(i);
  AdjList sub(nbs.size());
  for (std::size_t i = 0; i < nbs.size(); ++i) {
    for (const auto& second : g.neighbors(nbs[i].node)) {
      int j = local[static_cast<std::size_t>(second.node)];
      if (j >= 0) sub[i].push_back(j);
    }
  }
  return efficiency(sub);
}

// Wasserman-Faust closeness, valid for disconnected graphs.
double closeness(const AdjList& adj, int node, std::vector<int>& dist, std::vector<int>& queue) {
  const std::size_t n = adj.size();
  if (n <= 1) return 0.0;
  bfs(adj, node, dist, queue);
  double reach = 0.0, total = 0.0;
  for (int d : dist) {
    if (d > 0) {
      reach += 1.0;
      total += d;
    }
  }
  if (reach == 0.0) return 0.0;
  return (reach / static_cast<double>(n - 1)) * (reach / total);
}

}  // namespace

std::string_view to_string(NodeMeasure m) {
  switch (m) {
    case NodeMeasure::Degree: return "degree";
    case NodeMeasure::BinaryDegree: return "binary_degree";
    case NodeMeasure::ClusteringCoefficient: return "clustering_coefficient";
    case NodeMeasure::Closeness: return "closeness";
    case NodeMeasure::LocalEfficiency: return "local_efficiency";
  }
  return "?";
}

std::optional<NodeMeasure> parse_node_measure(std::string_view text) {
  for (auto m : {NodeMeasure::Degree, NodeMeasure::BinaryDegree, NodeMeasure::ClusteringCoefficient,
                 NodeMeasure::Closeness, NodeMeasure::LocalEfficiency}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

std::vector<int> bfs_distances(const FootballGraph& graph, int source) {
  AdjList adj = unweighted_lists(graph);
  std::vector<int> dist(graph.num_nodes()), queue;
  bfs(adj, source, dist, queue);
  return dist;
}

std::vector<double> node_measure_values(const FootballGraph& graph, NodeMeasure measure) {
  const std::size_t n = graph.num_nodes();
  std::vector<double> out(n, 0.0);
  switch (measure) {
    case NodeMeasure::Degree:
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(graph.weighted_degree(static_cast<int>(i)));
      break;
    case NodeMeasure::BinaryDegree:
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(graph.degree(static_cast<int>(i)));
      break;
    case NodeMeasure::ClusteringCoefficient:
      for (std::size_t i = 0; i < n; ++i) out[i] = clustering(graph, static_cast<int>(i));
      break;
    case NodeMeasure::Closeness: {
      AdjList adj = unweighted_lists(graph);
      std::vector<int> dist(n), queue;
      for (std::size_t i = 0; i < n; ++i) out[i] = closeness(adj, static_cast<int>(i), dist, queue);
      break;
    }
    case NodeMeasure::LocalEfficiency:
      for (std::size_t i = 0; i < n; ++i) out[i] = local_efficiency(graph, static_cast<int>(i));
      break;
  }
  return out;
}

NodeMeasureVector node_measures(const FootballGraph& graph, NodeMeasure measure,
                                const NodeUniverse& universe) {
  NodeMeasureVector out{measure, std::vector<double>(universe.size(), 0.0)};
  auto values = node_measure_values(graph, measure);
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    auto idx = universe.index_of(graph.nodes()[i]);
    if (!idx) throw PreconditionError("node '" + graph.nodes()[i] + "' is not in the universe");
    out.values[static_cast<std::size_t>(*idx)] = values[i];
  }
  return out;
}

double global_efficiency(const FootballGraph& graph) {
  return efficiency(unweighted_lists(graph));
}

double graph_energy(const FootballGraph& graph) {
  if (graph.num_edges() == 0) return 0.0;
  const auto n = static_cast<Eigen::Index>(graph.num_nodes());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : graph.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  return solver.eigenvalues().cwiseAbs().sum();
}

double transitivity(const FootballGraph& graph) {
  double closed = 0.0, triples = 0.0;
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    const double k = static_cast<double>(graph.degree(static_cast<int>(i)));
    triples += k * (k - 1) / 2.0;
    closed += static_cast<double>(triangles_at(graph, static_cast<int>(i)));
  }
  // Each triangle is counted once per corner, i.e. 3 times.
  return triples > 0 ? closed / triples : 0.0;
}

GraphFeatureVector graph_features(const FootballGraph& graph) {
  GraphFeatureVector f;
  const std::size_t n = graph.num_nodes();
  if (n == 0) return f;
  f.num_nodes = static_cast<double>(n);
  f.num_edges = static_cast<double>(graph.num_edges());

  AdjList adj = unweighted_lists(graph);
  std::vector<int> dist(n), queue;
  std::vector<int> component(n, -1);
  std::vector<int> ecc(n, 0);
  double path_sum = 0.0, inv_sum = 0.0, reachable_pairs = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    bfs(adj, static_cast<int>(s), dist, queue);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || dist[t] < 0) continue;
      path_sum += dist[t];
      inv_sum += 1.0 / dist[t];
      reachable_pairs += 1.0;
      ecc[s] = std::max(ecc[s], dist[t]);
    }
    if (component[s] < 0) {
      for (int v : queue) component[static_cast<std::size_t>(v)] = static_cast<int>(s);
    }
  }
  f.average_path_length = reachable_pairs > 0 ? path_sum / reachable_pairs : 0.0;
  f.global_efficiency = n > 1 ? inv_sum / (static_cast<double>(n) * static_cast<double>(n - 1)) : 0.0;

  // Largest component; components are labelled by their smallest node, so the
  // first maximal label wins ties.
  std::vector<std::size_t> sizes(n, 0);
  for (int c : component) ++sizes[static_cast<std::size_t>(c)];
  const auto largest = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  int diameter = 0, radius = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] != largest) continue;
    diameter = std::max(diameter, ecc[i]);
    radius = radius < 0 ? ecc[i] : std::min(radius, ecc[i]);
  }
  f.diameter = diameter;
  f.radius = std::max(radius, 0);

  f.graph_energy = graph_energy(graph);
  f.link_density = n > 1 ? 2.0 * f.num_edges / (static_cast<double>(n) * static_cast<double>(n - 1)) : 0.0;
  f.transitivity = transitivity(graph);
  return f;
}

Weight ConfedCounts::total() const {
  Weight sum = 0;
  for (std::size_t a = 0; a < kBuckets; ++a) {
    for (std::size_t b = a; b < kBuckets; ++b) sum += counts[a][b];
  }
  return sum;
}

std::string_view bucket_name(std::size_t bucket) {
  if (bucket < kConfederations.size()) return to_string(kConfederations[bucket]);
  return "unknown";
}

ConfedCounts confed_counts(const FootballGraph& graph, const ConfederationIndex& confeds) {
  std::vector<std::size_t> bucket(graph.num_nodes());
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    auto c = confeds.of(graph.nodes()[i]);
    bucket[i] = c ? bucket_of(*c) : ConfedCounts::kUnknown;
  }
  ConfedCounts out;
  for (const auto& e : graph.edges()) {
    auto a = bucket[static_cast<std::size_t>(e.u)], b = bucket[static_cast<std::size_t>(e.v)];
    out.counts[a][b] += e.weight;
    if (a != b) out.counts[b][a] += e.weight;
  }
  return out;
}

std::vector<ConfedCounts> confed_edge_counts(std::span<const FootballGraph> decades,
                                             std::span<const CountryRecord> countries) {
  ConfederationIndex index(countries);
  std::vector<ConfedCounts> out;
  out.reserve(decades.size());
  for (const auto& g : decades) out.push_back(confed_counts(g, index));
  return out;
}

std::vector<double> efficiency_series(std::span<const FootballGraph> decades) {
  std::vector<double> out(decades.size());
  detail::parallel_for(decades.size(), [&](std::size_t i) { out[i] = global_efficiency(decades[i]); });
  return out;
}

}  // namespace footnet
